#pragma once

#include <iosfwd>
#include <string>

#include "ctxrec/dataset.hpp"

namespace ctxrec {

struct ParseOptions {
    RatingScale scale;  // ratings outside the scale are rejected
};

/// Parses the flat contextual-rating CSV:
///
///   user,item,rating,<dim1>,...,<dimN>
///   U1,T1,3,weekend,home
///
/// Context cells carry a condition label or `na` (case-insensitive; an empty
/// cell means na). Lines starting with `#` are ignored. Dimension order
/// follows the header; condition vocabularies follow first appearance after
/// the reserved na. Duplicate (user, item, context) rows are kept.
Dataset parse_dataset(std::istream& in, const ParseOptions& options = {});

Dataset load_dataset(const std::string& path, const ParseOptions& options = {});

/// Inverse of parse_dataset: re-parsing the output yields an equal Dataset.
void write_dataset(std::ostream& out, const Dataset& dataset);

void save_dataset(const std::string& path, const Dataset& dataset);

/// Renders a situation as `dim=cond; dim=cond` over its non-na slots,
/// or "(all-na)" for c0.
std::string format_situation(const ContextSchema& schema, const ContextSituation& situation);

/// Parses `dim=cond` pairs separated by `,` or `;`; unlisted dimensions are
/// na. Throws ConfigError naming the offending pair on unknown names.
ContextSituation parse_situation(const ContextSchema& schema, const std::string& text);

}  // namespace ctxrec
