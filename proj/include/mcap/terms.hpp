#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace mcap {

/// A first-order term: a lowercase constant, an uppercase variable,
/// or an integer literal. Terms appear as arguments of actions and
/// query atoms.
class Term {
public:
    enum class Kind : std::uint8_t { Constant, Variable, Number };

    static Term constant(std::string name);
    static Term variable(std::string name);
    static Term number(std::int64_t value);

    Kind kind() const { return kind_; }
    bool is_variable() const { return kind_ == Kind::Variable; }
    const std::string& name() const { return name_; }
    std::int64_t number_value() const { return number_; }

    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }

private:
    Kind kind_ = Kind::Constant;
    std::string name_;
    std::int64_t number_ = 0;
};

/// Total structural order: kind rank, then payload. Used for
/// canonical sorting and deterministic tie-breaking.
int compare(const Term& a, const Term& b);

std::string to_string(const Term& t);

/// An action symbol with argument terms. Ground (variable-free)
/// action terms are the only ones that can be executed or stored in
/// the search tree.
struct ActionTerm {
    std::string name;
    std::vector<Term> args;

    bool ground() const;
    bool operator==(const ActionTerm& other) const;
    bool operator!=(const ActionTerm& other) const { return !(*this == other); }
};

int compare(const ActionTerm& a, const ActionTerm& b);
std::string to_string(const ActionTerm& a);

/// One literal of a conjunctive query: an optionally negated
/// predicate over terms.
struct QueryAtom {
    bool negated = false;
    std::string predicate;
    std::vector<Term> args;

    bool operator==(const QueryAtom& other) const;
};

int compare(const QueryAtom& a, const QueryAtom& b);

/// A conjunction of literals. The empty conjunction is the constant
/// "true" query.
struct QueryTerm {
    std::vector<QueryAtom> atoms;

    static QueryTerm truth() { return QueryTerm{}; }
    bool is_true() const { return atoms.empty(); }
    bool operator==(const QueryTerm& other) const;
};

int compare(const QueryTerm& a, const QueryTerm& b);
std::string to_string(const QueryTerm& q);

/// A binding of query variables to ground terms.
class Substitution {
public:
    Substitution() = default;

    /// Binds a variable; the term must be ground.
    void bind(const std::string& variable, Term value);
    const Term* lookup(const std::string& variable) const;
    bool empty() const { return bindings_.empty(); }
    std::size_t size() const { return bindings_.size(); }
    const std::map<std::string, Term>& bindings() const { return bindings_; }

    /// Applies the substitution to one term.
    Term apply(const Term& t) const;

    bool operator==(const Substitution& other) const;

private:
    std::map<std::string, Term> bindings_;
};

int compare(const Substitution& a, const Substitution& b);
std::string to_string(const Substitution& s);

} // namespace mcap
