#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ctxrec/mf.hpp"

namespace ctxrec {

enum class DevGranularity { global, per_user, per_item };

const char* to_string(DevGranularity g);

/// Additive contextual model: base prediction plus one learned rating
/// deviation per dimension, anchored at the all-na situation (na entries are
/// pinned to 0, so c0 predicts exactly the base).
///
/// At per-user / per-item granularity the deviation for (dim, cond, entity)
/// is global(dim, cond) + offset(dim, cond, entity): the global table is
/// trained alongside as the shrinkage target, and entities that never saw a
/// condition fall back to the global entry because their offset stays 0.
struct DeviationParams {
    MfParams base;
    DevGranularity granularity = DevGranularity::global;
    std::vector<Eigen::VectorXd> global_dev;        // per dim: conditions, [0]=na=0
    std::vector<Eigen::MatrixXd> entity_offset;     // per dim: conditions x entities; empty when global

    /// Effective deviation for one dimension slot. Unknown entities (< 0 or
    /// out of range) contribute only the global part.
    double deviation(int dim, int cond, int user, int item) const;
};

double dev_predict(const DeviationParams& params, int user, int item,
                   const ContextSituation& context);

struct DevGrad {
    MfGrad base;
    std::vector<double> global_dev;     // per dim, 0 where the slot is na
    std::vector<double> entity_offset;  // per dim, 0 where na or global model
};

double dev_example_loss(const DeviationParams& params, const ContextualRating& r, double reg);
void dev_example_grad(const DeviationParams& params, const ContextualRating& r, double reg,
                      DevGrad& out);
void dev_apply_grad(DeviationParams& params, const ContextualRating& r, const DevGrad& g,
                    double lr);

/// Joint SGD over the base factorization and the deviation tables.
DeviationParams dev_train(const Dataset& train, const TrainConfig& cfg, DevGranularity granularity,
                          std::vector<double>* loss_log = nullptr);

}  // namespace ctxrec
