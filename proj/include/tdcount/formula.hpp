#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdcount/errors.hpp"

namespace tdcount {

// A literal in DIMACS convention: +v for the positive literal of variable v,
// -v for the negative one. Variables are 1-based.
struct Literal {
  int var = 0;
  bool positive = true;

  static Literal from_dimacs(int lit) { return Literal{lit < 0 ? -lit : lit, lit > 0}; }
  int to_dimacs() const { return positive ? var : -var; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

// A clause is a set of literals; we keep it as a sorted, duplicate-free
// vector of DIMACS literals ordered by (variable, sign).
using Clause = std::vector<int>;

// Sorts and deduplicates; returns std::nullopt for tautologies (v and -v).
std::optional<Clause> normalize_clause(Clause lits);

// Partial assignment, variable -> truth value. Kept ordered so that
// iteration (and therefore everything derived from it) is deterministic.
using Assignment = std::map<int, bool>;

// A CNF formula as a set of clauses. Clause order is canonical (sorted),
// duplicates are collapsed, tautologies are assumed to have been dropped
// by the caller (parse_dimacs and apply_assignment do this).
class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(std::vector<Clause> clauses);

  const std::vector<Clause>& clauses() const { return clauses_; }
  // Variables occurring in at least one clause, ascending.
  const std::vector<int>& vars() const { return vars_; }
  bool has_empty_clause() const { return has_empty_clause_; }
  bool empty() const { return clauses_.empty(); }
  std::size_t size() const { return clauses_.size(); }
  bool contains_var(int v) const;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;

 private:
  std::vector<Clause> clauses_;
  std::vector<int> vars_;
  bool has_empty_clause_ = false;
};

// An instance of projected model counting. `num_vars` is the declared
// variable universe 1..num_vars; variables in it that occur in no clause
// are free. `projection` is sorted and lies within the universe.
struct PmcInstance {
  CnfFormula formula;
  int num_vars = 0;
  std::vector<int> projection;
};

// Reads DIMACS CNF. Projection variables may be declared with
// `c p show v1 ... vk 0` comment lines (several lines accumulate); absent
// that, the projection defaults to the variables occurring in the formula.
// Tautological clauses are dropped. Throws ParseError with a line number.
PmcInstance parse_dimacs(std::istream& in);
PmcInstance parse_dimacs(const std::string& text);

// F[alpha]: drops clauses with a literal set to 1, erases literals set
// to 0. The result may contain the empty clause.
CnfFormula apply_assignment(const CnfFormula& f, const Assignment& alpha);

// True iff F[alpha] has no clauses. `alpha` must be total on vars(f).
bool satisfies(const Assignment& alpha, const CnfFormula& f);

enum class PropagationStatus { kSatUnknown, kUnsat };

struct PropagationResult {
  CnfFormula formula;   // F[forced]
  Assignment forced;    // all unit-implied variables at fixpoint
  PropagationStatus status = PropagationStatus::kSatUnknown;
};

// Unit propagation to fixpoint. status == kUnsat iff an empty clause was
// derived, in which case `formula` still holds the last state reached.
PropagationResult unit_propagate(const CnfFormula& f);

// Deterministic content key: clauses sorted, variables renamed ascending
// by first occurrence in that order, serialized. Content-equal formulas
// (up to clause/literal order, duplicates, and consistent renaming) map to
// equal keys.
std::string canonical_key(const CnfFormula& f);

// Key for a (formula, projection) pair: same renaming applied to the
// projection variables. Used as the hybrid cache key.
std::string canonical_key(const CnfFormula& f, const std::vector<int>& projection);

}  // namespace tdcount
