#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ctxrec/dataset.hpp"
#include "ctxrec/rng.hpp"

namespace ctxrec {

/// Shared hyperparameters for every SGD trainer in the library.
struct TrainConfig {
    int rank = 10;              // latent rank F of the base factorization
    double learn_rate = 0.01;   // fixed SGD step
    double reg = 0.02;          // L2 weight, applied to every learned parameter
    int epochs = 100;
    std::uint64_t seed = 7;
    double init_spread = 0.01;  // factors start uniform in [-spread, spread]
    int sim_rank = 5;           // latent rank G of the LCS condition vectors
    double mcs_alpha = 1.0;     // distance-to-similarity shape, sim = exp(-alpha * d)

    /// Throws std::invalid_argument on out-of-range values. The fixed-step
    /// SGD here is stable for learn_rate <= 0.05 on 1-5 scale data; larger
    /// steps can diverge.
    void validate() const;
};

/// Biased matrix factorization: mu + b_u + b_t + p_u . q_t.
/// Factor matrices are entity-by-rank; row i holds entity i's vector.
struct MfParams {
    double mu = 0.0;
    Eigen::VectorXd user_bias;
    Eigen::VectorXd item_bias;
    Eigen::MatrixXd user_factors;
    Eigen::MatrixXd item_factors;

    int rank() const { return static_cast<int>(user_factors.cols()); }
    int user_count() const { return static_cast<int>(user_bias.size()); }
    int item_count() const { return static_cast<int>(item_bias.size()); }
    bool knows_user(int user) const { return user >= 0 && user < user_count(); }
    bool knows_item(int item) const { return item >= 0 && item < item_count(); }
};

/// Unclamped prediction. Unknown user or item falls back to mu plus whichever
/// bias is known; clamping to the rating scale happens only at report time.
double mf_predict(const MfParams& params, int user, int item);

/// Per-example gradient of 0.5*err^2 + 0.5*reg*|touched params|^2, the
/// quantity each SGD step descends. Exposed so tests can check it against
/// finite differences of mf_example_loss.
struct MfGrad {
    double user_bias = 0.0;
    double item_bias = 0.0;
    Eigen::VectorXd user_factors;
    Eigen::VectorXd item_factors;
};

double mf_example_loss(const MfParams& params, const ContextualRating& r, double reg);
void mf_example_grad(const MfParams& params, const ContextualRating& r, double reg, MfGrad& out);
void mf_apply_grad(MfParams& params, const ContextualRating& r, const MfGrad& g, double lr);

MfParams mf_init(int users, int items, double mean, const TrainConfig& cfg, Rng& rng);

/// SGD on L2-regularized squared error, examples reshuffled every epoch from
/// the seeded generator; deterministic given (data, cfg). When loss_log is
/// given it receives the full-objective value after each epoch.
MfParams mf_train(const Dataset& train, const TrainConfig& cfg,
                  std::vector<double>* loss_log = nullptr);

double mean_rating(const Dataset& data);

}  // namespace ctxrec
