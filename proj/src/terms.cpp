#include "mcap/terms.hpp"

#include "mcap/errors.hpp"

#include <sstream>

namespace mcap {

Term Term::constant(std::string name) {
    Term t;
    t.kind_ = Kind::Constant;
    t.name_ = std::move(name);
    return t;
}

Term Term::variable(std::string name) {
    Term t;
    t.kind_ = Kind::Variable;
    t.name_ = std::move(name);
    return t;
}

Term Term::number(std::int64_t value) {
    Term t;
    t.kind_ = Kind::Number;
    t.number_ = value;
    return t;
}

bool Term::operator==(const Term& other) const {
    return compare(*this, other) == 0;
}

int compare(const Term& a, const Term& b) {
    if (a.kind() != b.kind())
        return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
    if (a.kind() == Term::Kind::Number) {
        if (a.number_value() != b.number_value())
            return a.number_value() < b.number_value() ? -1 : 1;
        return 0;
    }
    return a.name().compare(b.name());
}

std::string to_string(const Term& t) {
    if (t.kind() == Term::Kind::Number)
        return std::to_string(t.number_value());
    return t.name();
}

bool ActionTerm::ground() const {
    for (const Term& t : args)
        if (t.is_variable())
            return false;
    return true;
}

bool ActionTerm::operator==(const ActionTerm& other) const {
    return compare(*this, other) == 0;
}

int compare(const ActionTerm& a, const ActionTerm& b) {
    if (int c = a.name.compare(b.name); c != 0)
        return c < 0 ? -1 : 1;
    std::size_t n = std::min(a.args.size(), b.args.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a.args[i], b.args[i]); c != 0)
            return c;
    if (a.args.size() != b.args.size())
        return a.args.size() < b.args.size() ? -1 : 1;
    return 0;
}

std::string to_string(const ActionTerm& a) {
    if (a.args.empty())
        return a.name;
    std::ostringstream out;
    out << a.name << '(';
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i > 0)
            out << ", ";
        out << to_string(a.args[i]);
    }
    out << ')';
    return out.str();
}

bool QueryAtom::operator==(const QueryAtom& other) const {
    return compare(*this, other) == 0;
}

int compare(const QueryAtom& a, const QueryAtom& b) {
    if (a.negated != b.negated)
        return a.negated < b.negated ? -1 : 1;
    if (int c = a.predicate.compare(b.predicate); c != 0)
        return c < 0 ? -1 : 1;
    std::size_t n = std::min(a.args.size(), b.args.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a.args[i], b.args[i]); c != 0)
            return c;
    if (a.args.size() != b.args.size())
        return a.args.size() < b.args.size() ? -1 : 1;
    return 0;
}

bool QueryTerm::operator==(const QueryTerm& other) const {
    return compare(*this, other) == 0;
}

int compare(const QueryTerm& a, const QueryTerm& b) {
    std::size_t n = std::min(a.atoms.size(), b.atoms.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = compare(a.atoms[i], b.atoms[i]); c != 0)
            return c;
    if (a.atoms.size() != b.atoms.size())
        return a.atoms.size() < b.atoms.size() ? -1 : 1;
    return 0;
}

std::string to_string(const QueryTerm& q) {
    if (q.is_true())
        return "true";
    std::ostringstream out;
    for (std::size_t i = 0; i < q.atoms.size(); ++i) {
        if (i > 0)
            out << " & ";
        const QueryAtom& atom = q.atoms[i];
        if (atom.negated)
            out << '!';
        out << atom.predicate;
        if (!atom.args.empty()) {
            out << '(';
            for (std::size_t j = 0; j < atom.args.size(); ++j) {
                if (j > 0)
                    out << ", ";
                out << to_string(atom.args[j]);
            }
            out << ')';
        }
    }
    return out.str();
}

void Substitution::bind(const std::string& variable, Term value) {
    if (value.is_variable())
        throw InvalidArgumentError("substitution binds " + variable +
                                   " to non-ground term " + to_string(value));
    bindings_[variable] = std::move(value);
}

const Term* Substitution::lookup(const std::string& variable) const {
    auto it = bindings_.find(variable);
    return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
    if (t.is_variable())
        if (const Term* bound = lookup(t.name()))
            return *bound;
    return t;
}

bool Substitution::operator==(const Substitution& other) const {
    return compare(*this, other) == 0;
}

int compare(const Substitution& a, const Substitution& b) {
    auto ia = a.bindings().begin(), ea = a.bindings().end();
    auto ib = b.bindings().begin(), eb = b.bindings().end();
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (int c = ia->first.compare(ib->first); c != 0)
            return c < 0 ? -1 : 1;
        if (int c = compare(ia->second, ib->second); c != 0)
            return c;
    }
    if (a.size() != b.size())
        return a.size() < b.size() ? -1 : 1;
    return 0;
}

std::string to_string(const Substitution& s) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (const auto& [var, value] : s.bindings()) {
        if (!first)
            out << ", ";
        first = false;
        out << var << " -> " << to_string(value);
    }
    out << '}';
    return out.str();
}

} // namespace mcap
