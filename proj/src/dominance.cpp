#include "vecgames/concepts/dominance.hpp"

#include <algorithm>

#include "vecgames/core/errors.hpp"

namespace vecgames {

const char* to_string(ParetoOrder order) {
  switch (order) {
    case ParetoOrder::StrictlyDominates: return "StrictlyDominates";
    case ParetoOrder::WeaklyDominates: return "WeaklyDominates";
    case ParetoOrder::Equal: return "Equal";
    case ParetoOrder::DominatedBy: return "DominatedBy";
    case ParetoOrder::Incomparable: return "Incomparable";
  }
  return "?";
}

ParetoOrder pareto_compare(const ObjectiveVector& u, const ObjectiveVector& v, double eps) {
  if (u.size() != v.size()) raise(Errc::LengthMismatch, "vectors of different length");
  if (u == v) return ParetoOrder::Equal;
  bool u_ge = true, v_ge = true;      // at-least-as-good within eps, per direction
  bool u_gt = false, v_gt = false;    // clearly better somewhere, per direction
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (!(u[j] >= v[j] - eps)) u_ge = false;
    if (!(v[j] >= u[j] - eps)) v_ge = false;
    if (u[j] > v[j] + eps) u_gt = true;
    if (v[j] > u[j] + eps) v_gt = true;
  }
  if (u_ge && u_gt && !v_gt) return ParetoOrder::StrictlyDominates;
  if (v_ge && v_gt && !u_gt) return ParetoOrder::DominatedBy;
  if (u_ge && !u_gt && !v_gt) return ParetoOrder::WeaklyDominates;
  return ParetoOrder::Incomparable;
}

bool weakly_dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
  if (u.size() != v.size()) raise(Errc::LengthMismatch, "vectors of different length");
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] < v[j]) return false;
  }
  return true;
}

bool strictly_dominates(const ObjectiveVector& u, const ObjectiveVector& v) {
  return weakly_dominates(u, v) && u != v;
}

std::vector<ObjectiveVector> pareto_filter(const std::vector<ObjectiveVector>& vectors) {
  if (vectors.empty()) return {};
  for (const auto& v : vectors) {
    if (v.size() != vectors.front().size())
      raise(Errc::LengthMismatch, "vectors of different length");
  }
  std::vector<ObjectiveVector> kept;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& candidate = vectors[i];
    bool drop = false;
    for (std::size_t j = 0; j < vectors.size() && !drop; ++j) {
      if (j == i) continue;
      if (strictly_dominates(vectors[j], candidate)) drop = true;
      // Collapse duplicates onto the first occurrence.
      if (j < i && vectors[j] == candidate) drop = true;
    }
    if (!drop) kept.push_back(candidate);
  }
  return kept;
}

MatrixOrder pareto_nash_compare(const ValueMatrix& u, const ValueMatrix& v) {
  if (u.agents() != v.agents()) raise(Errc::ShapeMismatch, "matrices with different row counts");
  bool u_dominates = true, v_dominates = true;
  bool u_strict = false, v_strict = false;
  for (std::size_t i = 0; i < u.agents(); ++i) {
    if (u.rows[i].size() != v.rows[i].size())
      raise(Errc::ShapeMismatch, "matrix rows with different lengths");
    if (!weakly_dominates(u.rows[i], v.rows[i])) u_dominates = false;
    if (!weakly_dominates(v.rows[i], u.rows[i])) v_dominates = false;
    if (strictly_dominates(u.rows[i], v.rows[i])) u_strict = true;
    if (strictly_dominates(v.rows[i], u.rows[i])) v_strict = true;
  }
  if (u_dominates && u_strict) return MatrixOrder::Dominates;
  if (v_dominates && v_strict) return MatrixOrder::DominatedBy;
  return MatrixOrder::Neither;
}

std::vector<ValueMatrix> pareto_nash_filter(const std::vector<ValueMatrix>& matrices) {
  std::vector<ValueMatrix> kept;
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto& candidate = matrices[i];
    bool drop = false;
    for (std::size_t j = 0; j < matrices.size() && !drop; ++j) {
      if (j == i) continue;
      if (pareto_nash_compare(matrices[j], candidate) == MatrixOrder::Dominates) drop = true;
      if (j < i && matrices[j] == candidate) drop = true;
    }
    if (!drop) kept.push_back(candidate);
  }
  return kept;
}

bool ParetoArchive::insert(ObjectiveVector value, std::string tag) {
  for (const auto& entry : entries_) {
    if (entry.value == value) return false;  // earliest representative wins
    if (strictly_dominates(entry.value, value)) return false;
  }
  entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                [&](const Entry& entry) {
                                  return strictly_dominates(value, entry.value);
                                }),
                 entries_.end());
  entries_.push_back(Entry{std::move(value), std::move(tag)});
  return true;
}

std::vector<ObjectiveVector> ParetoArchive::front() const {
  std::vector<ObjectiveVector> out;
  out.reserve(entries_.size());
  for (const auto& entry : entries_) out.push_back(entry.value);
  return out;
}

}  // namespace vecgames
