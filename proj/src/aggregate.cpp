#include "dreamgen/aggregate.hpp"

#include "dreamgen/error.hpp"

#include <algorithm>
#include <cmath>

namespace dreamgen::aggregate {

double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    if (u.size() != v.size())
        throw data_error("cosine: dimension mismatch");
    const double nu = u.norm();
    const double nv = v.norm();
    if (nu == 0.0 || nv == 0.0)
        throw data_error("cosine: zero-norm input");
    return std::clamp(u.dot(v) / (nu * nv), -1.0, 1.0);
}

Eigen::VectorXd prototype(const std::vector<Eigen::VectorXd>& vectors) {
    if (vectors.empty())
        throw data_error("prototype: empty input");
    const Eigen::Index d = vectors[0].size();
    Eigen::VectorXd sum = Eigen::VectorXd::Zero(d);
    for (const auto& v : vectors) {
        if (v.size() != d)
            throw data_error("prototype: dimension mismatch");
        sum += v;
    }
    return sum / static_cast<double>(vectors.size());
}

std::pair<std::size_t, Eigen::VectorXd> exemplar(const std::vector<Eigen::VectorXd>& vectors) {
    if (vectors.empty())
        throw data_error("exemplar: empty input");
    const std::size_t n = vectors.size();
    const Eigen::Index d = vectors[0].size();

    std::vector<Eigen::VectorXd> unit(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (vectors[i].size() != d)
            throw data_error("exemplar: dimension mismatch");
        const double norm = vectors[i].norm();
        if (norm == 0.0)
            throw data_error("exemplar: zero-norm member");
        unit[i] = vectors[i] / norm;
    }
    if (n == 1) return {0, vectors[0]};

    std::size_t best = 0;
    double best_score = -2.0;
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            acc += std::clamp(unit[i].dot(unit[j]), -1.0, 1.0);
        }
        const double mean = acc / static_cast<double>(n - 1);
        if (mean > best_score) {
            best_score = mean;
            best = i;
        }
    }
    return {best, vectors[best]};
}

} // namespace dreamgen::aggregate
