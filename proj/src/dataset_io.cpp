#include "ctxrec/dataset_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace ctxrec {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Dataset parse_dataset(std::istream& in, const ParseOptions& options) {
    Dataset data;
    data.scale = options.scale;

    std::string line;
    int line_no = 0;
    bool have_header = false;
    std::size_t column_count = 0;

    while (std::getline(in, line)) {
        ++line_no;
        std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        std::vector<std::string> fields = split_fields(line);
        for (std::string& f : fields) f = trim(f);

        if (!have_header) {
            if (fields.size() < 3 || fold_case(fields[0]) != "user" ||
                fold_case(fields[1]) != "item" || fold_case(fields[2]) != "rating") {
                throw ParseError("malformed header, expected user,item,rating,<dims...>", line_no);
            }
            for (std::size_t i = 3; i < fields.size(); ++i) {
                if (fields[i].empty())
                    throw ParseError("empty dimension name in header", line_no);
                data.schema.add_dimension(fields[i]);
            }
            column_count = fields.size();
            have_header = true;
            continue;
        }

        if (fields.size() != column_count)
            throw ParseError("ragged row, expected " + std::to_string(column_count) +
                                 " fields but found " + std::to_string(fields.size()),
                             line_no);
        if (fields[0].empty() || fields[1].empty())
            throw ParseError("empty user or item label", line_no);

        ContextualRating r;
        r.user = data.users.intern(fields[0]);
        r.item = data.items.intern(fields[1]);

        char* end = nullptr;
        const std::string& rating_text = fields[2];
        r.rating = std::strtod(rating_text.c_str(), &end);
        if (rating_text.empty() || end != rating_text.c_str() + rating_text.size())
            throw ParseError("non-numeric rating '" + rating_text + "'", line_no);
        if (!data.scale.contains(r.rating))
            throw ParseError("rating " + rating_text + " outside scale [" +
                                 format_double(data.scale.min) + ", " +
                                 format_double(data.scale.max) + "]",
                             line_no);

        r.context.conditions.resize(data.schema.dimension_count());
        for (int d = 0; d < data.schema.dimension_count(); ++d) {
            const std::string& cell = fields[3 + static_cast<std::size_t>(d)];
            if (cell.empty() || fold_case(cell) == kNaLabel)
                r.context.conditions[d] = kNaCondition;
            else
                r.context.conditions[d] = data.schema.add_condition(d, cell);
        }
        data.ratings.push_back(std::move(r));
    }

    if (!have_header) throw ParseError("empty input, missing header row");
    return data;
}

Dataset load_dataset(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open dataset file: " + path);
    return parse_dataset(in, options);
}

void write_dataset(std::ostream& out, const Dataset& dataset) {
    out << "user,item,rating";
    for (int d = 0; d < dataset.schema.dimension_count(); ++d)
        out << ',' << dataset.schema.dimension_name(d);
    out << '\n';
    for (const ContextualRating& r : dataset.ratings) {
        out << dataset.users.label(r.user) << ',' << dataset.items.label(r.item) << ','
            << format_double(r.rating);
        for (int d = 0; d < dataset.schema.dimension_count(); ++d)
            out << ',' << dataset.schema.condition_label(d, r.context[d]);
        out << '\n';
    }
}

void save_dataset(const std::string& path, const Dataset& dataset) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_dataset(out, dataset);
}

std::string format_situation(const ContextSchema& schema, const ContextSituation& situation) {
    std::string out;
    for (int d = 0; d < situation.size(); ++d) {
        if (situation[d] == kNaCondition) continue;
        if (!out.empty()) out += "; ";
        out += schema.dimension_name(d) + "=" + schema.condition_label(d, situation[d]);
    }
    return out.empty() ? "(all-na)" : out;
}

ContextSituation parse_situation(const ContextSchema& schema, const std::string& text) {
    ContextSituation situation = ContextSituation::all_na(schema.dimension_count());
    std::string cur;
    std::vector<std::string> pairs;
    for (char c : text) {
        if (c == ',' || c == ';') {
            pairs.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    pairs.push_back(cur);

    for (const std::string& raw : pairs) {
        std::string pair = trim(raw);
        if (pair.empty()) continue;
        std::size_t eq = pair.find('=');
        if (eq == std::string::npos)
            throw ConfigError("bad context pair '" + pair + "', expected dim=cond");
        std::string dim_name = trim(pair.substr(0, eq));
        std::string cond_name = trim(pair.substr(eq + 1));
        int dim = schema.find_dimension(dim_name);
        if (dim < 0) throw ConfigError("unknown context dimension in '" + pair + "'");
        int cond = schema.find_condition(dim, cond_name);
        if (cond < 0) throw ConfigError("unknown context condition in '" + pair + "'");
        situation.conditions[dim] = cond;
    }
    return situation;
}

}  // namespace ctxrec
