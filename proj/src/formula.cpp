#include "tdcount/formula.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace tdcount {

namespace {

// Order literals by variable, negative literal first for equal variables.
bool literal_less(int a, int b) {
  int va = std::abs(a), vb = std::abs(b);
  if (va != vb) return va < vb;
  return a < b;
}

}  // namespace

std::optional<Clause> normalize_clause(Clause lits) {
  std::sort(lits.begin(), lits.end(), literal_less);
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i] == -lits[i - 1]) return std::nullopt;  // tautology
  }
  return lits;
}

CnfFormula::CnfFormula(std::vector<Clause> clauses) : clauses_(std::move(clauses)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
  for (const Clause& c : clauses_) {
    if (c.empty()) has_empty_clause_ = true;
    for (int lit : c) vars_.push_back(std::abs(lit));
  }
  std::sort(vars_.begin(), vars_.end());
  vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

bool CnfFormula::contains_var(int v) const {
  return std::binary_search(vars_.begin(), vars_.end(), v);
}

namespace {

struct DimacsReader {
  std::istream& in;
  long line_no = 0;

  bool next_line(std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      return true;
    }
    return false;
  }
};

}  // namespace

PmcInstance parse_dimacs(std::istream& in) {
  DimacsReader reader{in};
  std::string line;
  int num_vars = -1;
  long num_clauses_declared = -1;
  std::vector<Clause> clauses;
  std::vector<int> show_vars;
  bool have_show = false;
  Clause current;
  bool in_clause = false;
  long clause_start_line = 0;

  while (reader.next_line(line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;  // blank line
    if (tok == "c") {
      std::string k1, k2;
      if (ls >> k1 && k1 == "p" && ls >> k2 && k2 == "show") {
        have_show = true;
        long long v;
        bool terminated = false;
        while (ls >> v) {
          if (v == 0) {
            terminated = true;
            break;
          }
          if (v < 1 || (num_vars >= 0 && v > num_vars)) {
            throw ParseError("show variable out of range: " + std::to_string(v),
                             reader.line_no);
          }
          show_vars.push_back(static_cast<int>(v));
        }
        if (!terminated) {
          throw ParseError("show line not 0-terminated", reader.line_no);
        }
      }
      continue;
    }
    if (tok == "p") {
      if (num_vars >= 0) throw ParseError("duplicate problem line", reader.line_no);
      std::string fmt;
      if (!(ls >> fmt) || fmt != "cnf" || !(ls >> num_vars) || !(ls >> num_clauses_declared) ||
          num_vars < 0 || num_clauses_declared < 0) {
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'", reader.line_no);
      }
      for (int v : show_vars) {
        if (v > num_vars) {
          throw ParseError("show variable out of range: " + std::to_string(v), reader.line_no);
        }
      }
      continue;
    }
    if (num_vars < 0) throw ParseError("clause before problem line", reader.line_no);
    // Clause data; literals may span lines until a 0 terminator.
    ls.clear();
    ls.seekg(0);
    long long lit;
    if (!in_clause) clause_start_line = reader.line_no;
    while (ls >> lit) {
      if (lit == 0) {
        auto norm = normalize_clause(std::move(current));
        current = Clause{};
        in_clause = false;
        if (norm) clauses.push_back(std::move(*norm));
      } else {
        long long v = lit < 0 ? -lit : lit;
        if (v > num_vars) {
          throw ParseError("literal out of range: " + std::to_string(lit), reader.line_no);
        }
        current.push_back(static_cast<int>(lit));
        in_clause = true;
      }
    }
    if (!ls.eof()) {
      throw ParseError("unexpected token in clause", reader.line_no);
    }
  }
  if (in_clause) {
    throw ParseError("clause not 0-terminated", clause_start_line);
  }
  if (num_vars < 0) throw ParseError("missing problem line", reader.line_no);

  PmcInstance inst;
  inst.formula = CnfFormula(std::move(clauses));
  inst.num_vars = num_vars;
  if (have_show) {
    std::sort(show_vars.begin(), show_vars.end());
    show_vars.erase(std::unique(show_vars.begin(), show_vars.end()), show_vars.end());
    inst.projection = std::move(show_vars);
  } else {
    inst.projection = inst.formula.vars();
  }
  return inst;
}

PmcInstance parse_dimacs(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfFormula apply_assignment(const CnfFormula& f, const Assignment& alpha) {
  std::vector<Clause> out;
  out.reserve(f.clauses().size());
  for (const Clause& c : f.clauses()) {
    Clause reduced;
    bool satisfied = false;
    for (int lit : c) {
      auto it = alpha.find(std::abs(lit));
      if (it == alpha.end()) {
        reduced.push_back(lit);
      } else if (it->second == (lit > 0)) {
        satisfied = true;
        break;
      }
      // literal set to 0: dropped
    }
    if (!satisfied) out.push_back(std::move(reduced));
  }
  return CnfFormula(std::move(out));
}

bool satisfies(const Assignment& alpha, const CnfFormula& f) {
  for (int v : f.vars()) {
    if (!alpha.contains(v)) {
      throw ContractViolation("satisfies: assignment not total on vars of formula (missing " +
                              std::to_string(v) + ")");
    }
  }
  return apply_assignment(f, alpha).empty();
}

PropagationResult unit_propagate(const CnfFormula& f) {
  PropagationResult result;
  result.formula = f;
  for (;;) {
    if (result.formula.has_empty_clause()) {
      result.status = PropagationStatus::kUnsat;
      return result;
    }
    Assignment units;
    for (const Clause& c : result.formula.clauses()) {
      if (c.size() == 1) {
        int lit = c[0];
        auto [it, inserted] = units.try_emplace(std::abs(lit), lit > 0);
        if (!inserted && it->second != (lit > 0)) {
          result.status = PropagationStatus::kUnsat;
          result.forced.merge(units);
          return result;
        }
      }
    }
    if (units.empty()) return result;
    result.formula = apply_assignment(result.formula, units);
    for (auto [v, b] : units) result.forced[v] = b;
  }
}

namespace {

std::vector<Clause> canonical_clauses(const CnfFormula& f, std::unordered_map<int, int>& rename) {
  std::vector<Clause> sorted = f.clauses();
  std::sort(sorted.begin(), sorted.end());
  int next_id = 1;
  for (const Clause& c : sorted) {
    for (int lit : c) {
      int v = std::abs(lit);
      if (rename.emplace(v, next_id).second) ++next_id;
    }
  }
  for (Clause& c : sorted) {
    for (int& lit : c) {
      int v = rename.at(std::abs(lit));
      lit = lit > 0 ? v : -v;
    }
    std::sort(c.begin(), c.end(), literal_less);
  }
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

}  // namespace

std::string canonical_key(const CnfFormula& f) {
  return canonical_key(f, {});
}

std::string canonical_key(const CnfFormula& f, const std::vector<int>& projection) {
  std::unordered_map<int, int> rename;
  std::vector<Clause> sorted = canonical_clauses(f, rename);
  std::string key;
  for (const Clause& c : sorted) {
    for (int lit : c) {
      key += std::to_string(lit);
      key += ' ';
    }
    key += "0 ";
  }
  if (!projection.empty()) {
    std::vector<int> renamed;
    renamed.reserve(projection.size());
    for (int v : projection) {
      auto it = rename.find(v);
      // Projection variables absent from the formula are free; they are
      // accounted for by multipliers before keys are formed, but keep the
      // key total just in case by a stable out-of-range encoding.
      renamed.push_back(it == rename.end() ? -(v + 1000000) : it->second);
    }
    std::sort(renamed.begin(), renamed.end());
    key += "p ";
    for (int v : renamed) {
      key += std::to_string(v);
      key += ' ';
    }
  }
  return key;
}

}  // namespace tdcount
