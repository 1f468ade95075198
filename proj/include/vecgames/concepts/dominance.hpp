#pragma once

#include <string>
#include <vector>

#include "vecgames/core/types.hpp"

namespace vecgames {

enum class ParetoOrder {
  StrictlyDominates,
  WeaklyDominates,
  Equal,
  DominatedBy,
  Incomparable,
};

const char* to_string(ParetoOrder order);

// Exact set-theoretic comparison. With eps = 0 (the default everywhere that
// feeds indicator math), WeaklyDominates is never produced: at-least-as-good
// on all objectives and unequal already implies strict dominance. The
// epsilon variant relaxes each coordinate comparison by eps and can report
// WeaklyDominates for vectors that are better-within-eps but not clearly
// better anywhere.
ParetoOrder pareto_compare(const ObjectiveVector& u, const ObjectiveVector& v,
                           double eps = 0.0);

// u >= v elementwise.
bool weakly_dominates(const ObjectiveVector& u, const ObjectiveVector& v);

// u >= v elementwise with at least one strict inequality.
bool strictly_dominates(const ObjectiveVector& u, const ObjectiveVector& v);

// Maximal subset with no strictly dominated member; duplicates collapse to
// the first occurrence. Output keeps the input order of the survivors.
std::vector<ObjectiveVector> pareto_filter(const std::vector<ObjectiveVector>& vectors);

enum class MatrixOrder { Dominates, DominatedBy, Neither };

// Per-agent value matrix: one payoff vector per agent, all the same length.
struct ValueMatrix {
  std::vector<ObjectiveVector> rows;

  std::size_t agents() const { return rows.size(); }
  std::size_t objectives() const { return rows.empty() ? 0 : rows[0].size(); }
  bool operator==(const ValueMatrix& other) const { return rows == other.rows; }
};

// Row-wise extension of Pareto dominance: U dominates V when every row of U
// weakly dominates the matching row of V and at least one row strictly does.
MatrixOrder pareto_nash_compare(const ValueMatrix& u, const ValueMatrix& v);

std::vector<ValueMatrix> pareto_nash_filter(const std::vector<ValueMatrix>& matrices);

// Mutually non-dominated set of (value vector, policy tag) pairs. Inserting a
// dominated or duplicate vector leaves the archive unchanged; inserting a
// dominating vector evicts everything it strictly dominates.
class ParetoArchive {
 public:
  struct Entry {
    ObjectiveVector value;
    std::string tag;
  };

  // Returns true when the vector was kept.
  bool insert(ObjectiveVector value, std::string tag);

  const std::vector<Entry>& entries() const { return entries_; }
  std::vector<ObjectiveVector> front() const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

}  // namespace vecgames
