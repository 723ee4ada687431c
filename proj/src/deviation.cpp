#include "ctxrec/deviation.hpp"

#include <stdexcept>

namespace ctxrec {

const char* to_string(DevGranularity g) {
    switch (g) {
        case DevGranularity::global: return "global";
        case DevGranularity::per_user: return "user";
        case DevGranularity::per_item: return "item";
    }
    return "?";
}

double DeviationParams::deviation(int dim, int cond, int user, int item) const {
    if (cond == kNaCondition) return 0.0;
    double value = global_dev[dim][cond];
    if (granularity == DevGranularity::per_user && user >= 0 &&
        user < entity_offset[dim].cols()) {
        value += entity_offset[dim](cond, user);
    } else if (granularity == DevGranularity::per_item && item >= 0 &&
               item < entity_offset[dim].cols()) {
        value += entity_offset[dim](cond, item);
    }
    return value;
}

double dev_predict(const DeviationParams& params, int user, int item,
                   const ContextSituation& context) {
    double score = mf_predict(params.base, user, item);
    for (int d = 0; d < context.size(); ++d) {
        const int cond = context[d];
        if (cond == kNaCondition) continue;  // na slots contribute nothing
        score += params.deviation(d, cond, user, item);
    }
    return score;
}

namespace {

int offset_entity(const DeviationParams& params, const ContextualRating& r) {
    switch (params.granularity) {
        case DevGranularity::per_user: return r.user;
        case DevGranularity::per_item: return r.item;
        default: return -1;
    }
}

}  // namespace

double dev_example_loss(const DeviationParams& params, const ContextualRating& r, double reg) {
    const double err = r.rating - dev_predict(params, r.user, r.item, r.context);
    double loss = 0.5 * err * err;
    loss += 0.5 * reg *
            (params.base.user_bias[r.user] * params.base.user_bias[r.user] +
             params.base.item_bias[r.item] * params.base.item_bias[r.item] +
             params.base.user_factors.row(r.user).squaredNorm() +
             params.base.item_factors.row(r.item).squaredNorm());
    const int entity = offset_entity(params, r);
    for (int d = 0; d < r.context.size(); ++d) {
        const int cond = r.context[d];
        if (cond == kNaCondition) continue;
        const double g = params.global_dev[d][cond];
        loss += 0.5 * reg * g * g;
        if (entity >= 0) {
            const double o = params.entity_offset[d](cond, entity);
            loss += 0.5 * reg * o * o;
        }
    }
    return loss;
}

void dev_example_grad(const DeviationParams& params, const ContextualRating& r, double reg,
                      DevGrad& out) {
    const double err = r.rating - dev_predict(params, r.user, r.item, r.context);
    const MfParams& base = params.base;

    out.base.user_bias = -err + reg * base.user_bias[r.user];
    out.base.item_bias = -err + reg * base.item_bias[r.item];
    out.base.user_factors = -err * base.item_factors.row(r.item).transpose() +
                            reg * base.user_factors.row(r.user).transpose();
    out.base.item_factors = -err * base.user_factors.row(r.user).transpose() +
                            reg * base.item_factors.row(r.item).transpose();

    const int dims = r.context.size();
    out.global_dev.assign(dims, 0.0);
    out.entity_offset.assign(dims, 0.0);
    const int entity = offset_entity(params, r);
    for (int d = 0; d < dims; ++d) {
        const int cond = r.context[d];
        if (cond == kNaCondition) continue;  // na pinned at 0 throughout
        out.global_dev[d] = -err + reg * params.global_dev[d][cond];
        if (entity >= 0)
            out.entity_offset[d] = -err + reg * params.entity_offset[d](cond, entity);
    }
}

void dev_apply_grad(DeviationParams& params, const ContextualRating& r, const DevGrad& g,
                    double lr) {
    mf_apply_grad(params.base, r, g.base, lr);
    const int entity = offset_entity(params, r);
    for (int d = 0; d < r.context.size(); ++d) {
        const int cond = r.context[d];
        if (cond == kNaCondition) continue;
        params.global_dev[d][cond] -= lr * g.global_dev[d];
        if (entity >= 0) params.entity_offset[d](cond, entity) -= lr * g.entity_offset[d];
    }
}

DeviationParams dev_train(const Dataset& train, const TrainConfig& cfg,
                          DevGranularity granularity, std::vector<double>* loss_log) {
    cfg.validate();
    if (train.ratings.empty()) throw std::invalid_argument("dev_train: empty training data");

    Rng rng(cfg.seed);
    DeviationParams params;
    params.base = mf_init(train.user_count(), train.item_count(), mean_rating(train), cfg, rng);
    params.granularity = granularity;

    const int dims = train.schema.dimension_count();
    params.global_dev.resize(dims);
    params.entity_offset.resize(dims);
    const int entities = granularity == DevGranularity::per_user   ? train.user_count()
                         : granularity == DevGranularity::per_item ? train.item_count()
                                                                   : 0;
    for (int d = 0; d < dims; ++d) {
        params.global_dev[d] = Eigen::VectorXd::Zero(train.schema.condition_count(d));
        if (entities > 0)
            params.entity_offset[d] =
                Eigen::MatrixXd::Zero(train.schema.condition_count(d), entities);
    }

    std::vector<std::size_t> order(train.ratings.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    DevGrad grad;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t i : order) {
            const ContextualRating& r = train.ratings[i];
            dev_example_grad(params, r, cfg.reg, grad);
            dev_apply_grad(params, r, grad, cfg.learn_rate);
        }
        if (loss_log) {
            double sse = 0.0;
            for (const ContextualRating& r : train.ratings) {
                const double err = r.rating - dev_predict(params, r.user, r.item, r.context);
                sse += err * err;
            }
            loss_log->push_back(sse / static_cast<double>(train.ratings.size()));
        }
    }
    return params;
}

}  // namespace ctxrec
