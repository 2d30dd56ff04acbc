#include "gsep/io.hpp"

#include "gsep/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace gsep::io {

using nlohmann::json;

std::vector<std::string> ordering_labels(int n_modes) {
    std::vector<std::string> labels;
    for (int k = 1; k <= n_modes; ++k) {
        labels.push_back("q" + std::to_string(k));
        labels.push_back("p" + std::to_string(k));
    }
    return labels;
}

json state_to_json(const GaussianState &state) {
    const Matrix &m = state.covariance.matrix();
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j));
        }
        rows.push_back(std::move(row));
    }
    json mean = json::array();
    for (Eigen::Index i = 0; i < state.mean.size(); ++i) {
        mean.push_back(state.mean(i));
    }
    return json{{"convention", std::string(kConvention)},
                {"ordering", ordering_labels(state.covariance.mode_count())},
                {"mean", std::move(mean)},
                {"matrix", std::move(rows)}};
}

namespace {

double number_at(const json &value, const std::string &where) {
    if (!value.is_number()) {
        throw Error(ErrorKind::parse, where + " must be a number");
    }
    return value.get<double>();
}

}  // namespace

GaussianState state_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw Error(ErrorKind::parse, "covariance document must be a JSON object");
    }
    const auto conv = doc.find("convention");
    if (conv == doc.end() || !conv->is_string()) {
        throw Error(ErrorKind::parse, "covariance document is missing the \"convention\" string");
    }
    if (conv->get<std::string>() != kConvention) {
        throw Error(ErrorKind::parse, "unsupported convention \"" + conv->get<std::string>() + "\", expected \"" +
                                          std::string(kConvention) + "\"");
    }
    const auto mat = doc.find("matrix");
    if (mat == doc.end() || !mat->is_array() || mat->empty()) {
        throw Error(ErrorKind::parse, "covariance document needs a non-empty \"matrix\" array");
    }
    const auto dim = static_cast<Eigen::Index>(mat->size());
    Matrix m(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        const json &row = (*mat)[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
            throw Error(ErrorKind::dimension, "\"matrix\" row " + std::to_string(i) + " must have " +
                                                  std::to_string(dim) + " entries");
        }
        for (Eigen::Index j = 0; j < dim; ++j) {
            m(i, j) = number_at(row[static_cast<std::size_t>(j)],
                                "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
    }
    CovarianceMatrix cov = CovarianceMatrix::validate(m);

    const auto ord = doc.find("ordering");
    if (ord != doc.end()) {
        if (!ord->is_array() || *ord != json(ordering_labels(cov.mode_count()))) {
            throw Error(ErrorKind::parse, "\"ordering\" must be [\"q1\",\"p1\",\"q2\",\"p2\",...]");
        }
    }

    Vector mean = Vector::Zero(dim);
    const auto mu = doc.find("mean");
    if (mu != doc.end()) {
        if (!mu->is_array() || static_cast<Eigen::Index>(mu->size()) != dim) {
            throw Error(ErrorKind::dimension, "\"mean\" must have " + std::to_string(dim) + " entries");
        }
        for (Eigen::Index i = 0; i < dim; ++i) {
            mean(i) = number_at((*mu)[static_cast<std::size_t>(i)], "mean[" + std::to_string(i) + "]");
        }
    }
    return {std::move(mean), std::move(cov)};
}

GaussianState read_state(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::parse, "cannot open " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::parse, path.string() + ": " + e.what());
    }
    return state_from_json(doc);
}

void write_state(const std::filesystem::path &path, const GaussianState &state) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::parse, "cannot write " + path.string());
    }
    out << state_to_json(state).dump(2) << '\n';
}

namespace {

void dump_into(const json &value, std::string &out) {
    switch (value.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            // nlohmann::json objects are std::map, already sorted by key.
            for (const auto &[key, item] : value.items()) {
                if (!first) {
                    out += ',';
                }
                first = false;
                out += json(key).dump();
                out += ':';
                dump_into(item, out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto &item : value) {
                if (!first) {
                    out += ',';
                }
                first = false;
                dump_into(item, out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float: {
            const double x = value.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
                break;
            }
            char buf[32];
            // -0 would re-parse as the integer 0.
            std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
            out += buf;
            break;
        }
        default:
            out += value.dump();
            break;
    }
}

}  // namespace

std::string canonical_dump(const json &value) {
    std::string out;
    dump_into(value, out);
    return out;
}

}  // namespace gsep::io
