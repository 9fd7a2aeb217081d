#include "rsinfer/core/sample_bundle.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace rsinfer {

SampleBundle::SampleBundle(std::vector<SetRealization> r)
    : realizations(std::move(r)) {
    if (realizations.empty()) throw ConfigError("sample bundle needs N >= 1");
    for (const auto& s : realizations)
        if (s.is_empty()) throw ConfigError("sample bundle must not hold empty sets");
}

double estimate_rsd(const SampleBundle& b, const IntervalBox& q) {
    std::size_t n = 0;
    for (const auto& s : b.realizations)
        if (contains(s, q)) ++n;
    return double(n) / double(b.size());
}

double estimate_capacity(const SampleBundle& b, const IntervalBox& q) {
    std::size_t n = 0;
    for (const auto& s : b.realizations)
        if (hits(s, q)) ++n;
    return double(n) / double(b.size());
}

double estimate_rsd(const SampleBundle& b, const SetRealization& q) {
    std::size_t n = 0;
    for (const auto& s : b.realizations)
        if (subset_of_set(s, q)) ++n;
    return double(n) / double(b.size());
}

double estimate_capacity(const SampleBundle& b, const SetRealization& q) {
    std::size_t n = 0;
    for (const auto& s : b.realizations)
        if (hits_set(s, q)) ++n;
    return double(n) / double(b.size());
}

namespace {

void append_num(std::string& line, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, ",%.17g", v);
    line += buf;
}

} // namespace

void write_bundle_csv(const SampleBundle& b, std::ostream& os) {
    os << "kind,dim,count,values\n";
    for (const auto& s : b.realizations) {
        std::string line;
        if (s.is_points()) {
            const auto& pts = s.as_points().pts;
            line = "points," + std::to_string(pts[0].size()) + "," +
                   std::to_string(pts.size());
            for (const auto& p : pts)
                for (double v : p) append_num(line, v);
        } else if (s.is_box()) {
            const auto& bx = s.as_box();
            line = "box," + std::to_string(bx.dim()) + ",1";
            for (double v : bx.lo) append_num(line, v);
            for (double v : bx.hi) append_num(line, v);
        } else if (s.is_box_union()) {
            const auto& boxes = s.as_box_union().boxes;
            line = "union," + std::to_string(boxes[0].dim()) + "," +
                   std::to_string(boxes.size());
            for (const auto& bx : boxes) {
                for (double v : bx.lo) append_num(line, v);
                for (double v : bx.hi) append_num(line, v);
            }
        } else {
            throw ConfigError("cannot serialize an empty realization");
        }
        os << line << '\n';
    }
}

SampleBundle read_bundle_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("kind,", 0) != 0)
        throw ConfigError("bundle csv: missing header");
    std::vector<SetRealization> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string kind, field;
        std::getline(ss, kind, ',');
        std::getline(ss, field, ',');
        const std::size_t dim = std::stoul(field);
        std::getline(ss, field, ',');
        const std::size_t count = std::stoul(field);
        Vec vals;
        while (std::getline(ss, field, ',')) vals.push_back(std::stod(field));
        if (kind == "points") {
            if (vals.size() != dim * count)
                throw ConfigError("bundle csv: bad points record");
            std::vector<Vec> pts(count, Vec(dim));
            for (std::size_t i = 0; i < count; ++i)
                for (std::size_t d = 0; d < dim; ++d) pts[i][d] = vals[i * dim + d];
            out.push_back(SetRealization::points(std::move(pts)));
        } else if (kind == "box" || kind == "union") {
            if (vals.size() != 2 * dim * count)
                throw ConfigError("bundle csv: bad box record");
            std::vector<IntervalBox> boxes;
            for (std::size_t i = 0; i < count; ++i) {
                Vec lo(dim), hi(dim);
                for (std::size_t d = 0; d < dim; ++d) {
                    lo[d] = vals[i * 2 * dim + d];
                    hi[d] = vals[i * 2 * dim + dim + d];
                }
                boxes.emplace_back(std::move(lo), std::move(hi));
            }
            if (kind == "box")
                out.push_back(SetRealization::box(std::move(boxes[0])));
            else
                out.push_back(SetRealization::box_union(std::move(boxes)));
        } else {
            throw ConfigError("bundle csv: unknown kind " + kind);
        }
    }
    return SampleBundle(std::move(out));
}

}  // namespace rsinfer
