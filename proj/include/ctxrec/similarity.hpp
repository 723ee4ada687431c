#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ctxrec/mf.hpp"

namespace ctxrec {

enum class SimBackend { ics, lcs, mcs };

const char* to_string(SimBackend b);

/// Independent context similarity: one symmetric condition-pair table per
/// dimension, entries in [0,1], diagonal pinned at 1. Context similarity is
/// the product of the per-dimension entries. Pairs never seen in training
/// keep their neutral initial value 1; a condition outside the table raises
/// MissingEntryError (the table cannot generalize past its schema).
struct IcsParams {
    std::vector<Eigen::MatrixXd> tables;  // per dim: conditions x conditions
};

/// Latent context similarity: one rank-G vector per (dimension, condition);
/// a pair's similarity is the dot product, clamped to [0,1] before entering
/// the product across dimensions. Conditions outside the table fall back to
/// the jitter-free initial vector ones/sqrt(G), which is what lets this
/// backend cover conditions the table never saw.
struct LcsParams {
    int rank = 0;
    std::vector<Eigen::MatrixXd> vectors;  // per dim: conditions x rank

    Eigen::VectorXd fallback_vector() const {
        return Eigen::VectorXd::Constant(rank, 1.0 / std::sqrt(static_cast<double>(rank)));
    }
};

/// Multidimensional context similarity: every condition gets one real
/// coordinate on its dimension's axis, so a situation is a point in R^N and
/// dissimilarity is the Euclidean distance between points. Similarity is
/// exp(-alpha * distance): 1 exactly at distance 0, positive everywhere.
/// Conditions outside the table sit at the axis origin.
struct McsParams {
    std::vector<Eigen::VectorXd> coords;  // per dim: conditions
};

/// Multiplicative contextual model: F(u,t,c) = P(u,t) * Sim(c0, c), with one
/// of the three similarity backends supplying Sim.
struct SimilarityModel {
    MfParams base;
    SimBackend backend = SimBackend::ics;
    double alpha = 1.0;  // MCS distance-to-similarity shape
    IcsParams ics;
    LcsParams lcs;
    McsParams mcs;
};

double context_similarity(const SimilarityModel& model, const ContextSituation& a,
                          const ContextSituation& b);

/// Euclidean distance between the two situations' MCS points.
double mcs_distance(const McsParams& mcs, const ContextSituation& a, const ContextSituation& b);

double sim_predict(const SimilarityModel& model, int user, int item,
                   const ContextSituation& context);

/// Per-example gradients of the joint objective, one slot per dimension.
/// Slots that do not apply to the active backend (or are pinned, like the na
/// anchor of an ICS table) stay zero.
struct SimGrad {
    MfGrad base;
    std::vector<double> ics_entry;            // d/d sim_i(na, c_i)
    std::vector<Eigen::VectorXd> lcs_anchor;  // d/d v_i(na)
    std::vector<Eigen::VectorXd> lcs_cond;    // d/d v_i(c_i)
    std::vector<double> mcs_anchor;           // d/d x_i(na)
    std::vector<double> mcs_cond;             // d/d x_i(c_i)
};

double sim_example_loss(const SimilarityModel& model, const ContextualRating& r, double reg);
void sim_example_grad(const SimilarityModel& model, const ContextualRating& r, double reg,
                      SimGrad& out);
void sim_apply_grad(SimilarityModel& model, const ContextualRating& r, const SimGrad& g,
                    double lr);

/// Joint SGD over the base factorization and the backend parameters. ICS
/// starts at all-ones (the context-free model), keeps entries clamped to
/// [0,1] after every update, and is re-symmetrized at each epoch end.
SimilarityModel sim_train(const Dataset& train, const TrainConfig& cfg, SimBackend backend,
                          std::vector<double>* loss_log = nullptr);

}  // namespace ctxrec
