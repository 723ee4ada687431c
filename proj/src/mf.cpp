#include "ctxrec/mf.hpp"

#include <stdexcept>

namespace ctxrec {

void TrainConfig::validate() const {
    if (rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (learn_rate <= 0.0) throw std::invalid_argument("learn_rate must be > 0");
    if (reg < 0.0) throw std::invalid_argument("reg must be >= 0");
    if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
    if (init_spread <= 0.0) throw std::invalid_argument("init_spread must be > 0");
    if (sim_rank < 1) throw std::invalid_argument("sim_rank must be >= 1");
    if (mcs_alpha <= 0.0) throw std::invalid_argument("mcs_alpha must be > 0");
}

double mean_rating(const Dataset& data) {
    if (data.ratings.empty()) throw std::invalid_argument("empty dataset");
    double sum = 0.0;
    for (const ContextualRating& r : data.ratings) sum += r.rating;
    return sum / static_cast<double>(data.ratings.size());
}

double mf_predict(const MfParams& params, int user, int item) {
    double score = params.mu;
    const bool ku = params.knows_user(user);
    const bool ki = params.knows_item(item);
    if (ku) score += params.user_bias[user];
    if (ki) score += params.item_bias[item];
    if (ku && ki) score += params.user_factors.row(user).dot(params.item_factors.row(item));
    return score;
}

double mf_example_loss(const MfParams& params, const ContextualRating& r, double reg) {
    const double err = r.rating - mf_predict(params, r.user, r.item);
    double loss = 0.5 * err * err;
    loss += 0.5 * reg *
            (params.user_bias[r.user] * params.user_bias[r.user] +
             params.item_bias[r.item] * params.item_bias[r.item] +
             params.user_factors.row(r.user).squaredNorm() +
             params.item_factors.row(r.item).squaredNorm());
    return loss;
}

void mf_example_grad(const MfParams& params, const ContextualRating& r, double reg, MfGrad& out) {
    const double err = r.rating - mf_predict(params, r.user, r.item);
    out.user_bias = -err + reg * params.user_bias[r.user];
    out.item_bias = -err + reg * params.item_bias[r.item];
    out.user_factors = -err * params.item_factors.row(r.item).transpose() +
                       reg * params.user_factors.row(r.user).transpose();
    out.item_factors = -err * params.user_factors.row(r.user).transpose() +
                       reg * params.item_factors.row(r.item).transpose();
}

void mf_apply_grad(MfParams& params, const ContextualRating& r, const MfGrad& g, double lr) {
    params.user_bias[r.user] -= lr * g.user_bias;
    params.item_bias[r.item] -= lr * g.item_bias;
    params.user_factors.row(r.user) -= lr * g.user_factors.transpose();
    params.item_factors.row(r.item) -= lr * g.item_factors.transpose();
}

MfParams mf_init(int users, int items, double mean, const TrainConfig& cfg, Rng& rng) {
    MfParams p;
    p.mu = mean;
    p.user_bias = Eigen::VectorXd::Zero(users);
    p.item_bias = Eigen::VectorXd::Zero(items);
    p.user_factors.resize(users, cfg.rank);
    p.item_factors.resize(items, cfg.rank);
    for (int u = 0; u < users; ++u)
        for (int f = 0; f < cfg.rank; ++f)
            p.user_factors(u, f) = rng.uniform(-cfg.init_spread, cfg.init_spread);
    for (int t = 0; t < items; ++t)
        for (int f = 0; f < cfg.rank; ++f)
            p.item_factors(t, f) = rng.uniform(-cfg.init_spread, cfg.init_spread);
    return p;
}

namespace {

double full_objective(const MfParams& params, const Dataset& data, double reg) {
    double sse = 0.0;
    for (const ContextualRating& r : data.ratings) {
        const double err = r.rating - mf_predict(params, r.user, r.item);
        sse += err * err;
    }
    double penalty = params.user_bias.squaredNorm() + params.item_bias.squaredNorm() +
                     params.user_factors.squaredNorm() + params.item_factors.squaredNorm();
    return sse / static_cast<double>(data.ratings.size()) + reg * penalty;
}

}  // namespace

MfParams mf_train(const Dataset& train, const TrainConfig& cfg, std::vector<double>* loss_log) {
    cfg.validate();
    if (train.ratings.empty()) throw std::invalid_argument("mf_train: empty training data");

    Rng rng(cfg.seed);
    MfParams params = mf_init(train.user_count(), train.item_count(), mean_rating(train), cfg, rng);

    std::vector<std::size_t> order(train.ratings.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    MfGrad grad;
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        rng.shuffle(order);
        for (std::size_t i : order) {
            const ContextualRating& r = train.ratings[i];
            mf_example_grad(params, r, cfg.reg, grad);
            mf_apply_grad(params, r, grad, cfg.learn_rate);
        }
        if (loss_log) loss_log->push_back(full_objective(params, train, cfg.reg));
    }
    return params;
}

}  // namespace ctxrec
