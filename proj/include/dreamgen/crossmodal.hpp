#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dreamgen::crossmodal {

// Penalty variants of the mapping objective
//   J(M) = (1/2)|WM - V|_F^2 + lambda1*|M|_1 + (lambda2/2)*|M|_F^2
enum class Variant { Plain, Ridge, Lasso, SymElastic };

const char* variant_name(Variant v);
bool parse_variant(const std::string& tok, Variant& out);

struct TrainMeta {
    Eigen::Index n_train = 0;
    double final_objective = 0.0;
    int iterations_used = 0; // coordinate-descent sweeps (max over columns)
    bool converged = true;
    // Objective after each completed sweep, summed over output columns.
    // Kept in memory only; not part of the model file.
    std::vector<double> objective_history;
};

// Fingerprint of the labels a model was trained on.  The aggregate digest
// identifies the exact set; the per-label hashes answer membership queries
// for the zero-shot guard without shipping the plaintext list.
struct TrainLabels {
    std::uint64_t digest = 0;
    std::vector<std::uint64_t> hashes; // sorted FNV-1a of each label

    bool empty() const { return hashes.empty(); }
    bool contains(const std::string& label) const;
    static TrainLabels from(const std::vector<std::string>& labels);
};

// Optional column standardization of W (off by default); means/scales fold
// into predict.
struct Standardization {
    bool enabled = false;
    Eigen::VectorXd means;
    Eigen::VectorXd scales;
};

struct MappingModel {
    Eigen::MatrixXd M; // d1 x d2
    Variant variant = Variant::Plain;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    TrainMeta train_meta;
    Standardization standardize;
    TrainLabels train_labels;

    Eigen::Index d1() const { return M.rows(); }
    Eigen::Index d2() const { return M.cols(); }
    void validate() const;
};

struct FitOptions {
    double tol = 1e-8;     // max coefficient change per sweep
    int max_iters = 10000; // sweeps
    bool standardize = false;
};

// Requires lambdas consistent with the variant: PLAIN 0/0, RIDGE 0/>0,
// LASSO >0/0, SYM_ELASTIC equal and >0.
void check_variant_lambdas(Variant variant, double lambda1, double lambda2);

double objective(const Eigen::MatrixXd& M, const Eigen::MatrixXd& W,
                 const Eigen::MatrixXd& V, double lambda1, double lambda2);

// PLAIN/RIDGE by normal equations (PLAIN falls back to the minimum-norm
// least-squares solution when W'W is singular); LASSO/SYM_ELASTIC by cyclic
// coordinate descent per output column.  Non-convergence is reported through
// train_meta.converged, not an error.
MappingModel fit_mapping(const Eigen::MatrixXd& W, const Eigen::MatrixXd& V,
                         Variant variant, double lambda1, double lambda2,
                         const FitOptions& opts = {});

Eigen::VectorXd predict(const MappingModel& model, const Eigen::VectorXd& w);
Eigen::MatrixXd predict_rows(const MappingModel& model, const Eigen::MatrixXd& W);

struct CvReport {
    std::vector<std::pair<double, double>> grid;   // (lambda1, lambda2)
    std::vector<std::vector<double>> fold_errors;  // [grid point][fold]
    std::vector<double> mean_errors;               // per grid point
    std::pair<double, double> chosen{0.0, 0.0};
};

// Seeded shuffle of row indices dealt round-robin into k folds; per grid
// point the score is the mean over folds of the per-element squared
// prediction error on the held-out fold.  Ties go to the larger
// lambda1+lambda2 (then larger lambda1, then first in grid order).
CvReport cross_validate(const Eigen::MatrixXd& W, const Eigen::MatrixXd& V,
                        Variant variant,
                        const std::vector<std::pair<double, double>>& grid,
                        int k, std::uint64_t seed, const FitOptions& opts = {});

void save_mapping(const MappingModel& model, const std::string& path);
MappingModel load_mapping(const std::string& path);

} // namespace dreamgen::crossmodal
