#pragma once

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace dreamgen::aggregate {

enum class AggregationMethod { Prototype, Exemplar };

// u.v / (|u||v|), clamped to [-1, 1].  Throws on dimension mismatch or a
// zero-norm input.
double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

// Componentwise arithmetic mean of a non-empty set of equal-dim vectors.
Eigen::VectorXd prototype(const std::vector<Eigen::VectorXd>& vectors);

// The member with the highest mean cosine similarity to all *other* members
// (self excluded).  Singletons return themselves; ties break to the lowest
// index.  Every member must have positive norm.
std::pair<std::size_t, Eigen::VectorXd> exemplar(const std::vector<Eigen::VectorXd>& vectors);

} // namespace dreamgen::aggregate
