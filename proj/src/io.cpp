#include "krcore/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "krcore/errors.hpp"

namespace krcore {

namespace {

struct IdMap {
    std::unordered_map<std::string, VertexId> to_dense;
    std::vector<std::string> external;

    VertexId intern(const std::string& token) {
        auto [it, fresh] = to_dense.emplace(token, static_cast<VertexId>(external.size()));
        if (fresh) external.push_back(token);
        return it->second;
    }
};

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(std::move(tok));
    return out;
}

double parse_double(const std::string& tok, const std::string& where) {
    try {
        std::size_t used = 0;
        double value = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ConfigError(where + ": bad number '" + tok + "'");
    }
}

bool parse_int64(const std::string& tok, long long& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

AttributedGraph load_graph(const std::string& edge_path, const std::string& attr_path,
                           AttrMode mode) {
    std::ifstream edges_in(edge_path);
    if (!edges_in) throw ConfigError("cannot open edge file: " + edge_path);
    std::ifstream attrs_in(attr_path);
    if (!attrs_in) throw ConfigError("cannot open attribute file: " + attr_path);

    IdMap ids;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(edges_in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ConfigError(edge_path + ":" + std::to_string(lineno) +
                              ": expected two vertex ids");
        edges.emplace_back(ids.intern(toks[0]), ids.intern(toks[1]));
    }

    std::vector<VertexAttribute> attrs;
    std::vector<char> has_attr;
    auto place = [&](VertexId v, VertexAttribute a) {
        if (attrs.size() <= v) {
            attrs.resize(v + 1, Point2D{});
            has_attr.resize(v + 1, 0);
        }
        if (has_attr[v]) throw ConfigError("duplicate attribute for vertex " + ids.external[v]);
        attrs[v] = std::move(a);
        has_attr[v] = 1;
    };

    lineno = 0;
    while (std::getline(attrs_in, line)) {
        ++lineno;
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string where = attr_path + ":" + std::to_string(lineno);
        VertexId v = ids.intern(toks[0]);
        if (mode == AttrMode::Geo) {
            if (toks.size() != 3) throw ConfigError(where + ": expected 'id x y'");
            place(v, Point2D{parse_double(toks[1], where), parse_double(toks[2], where)});
        } else {
            if (toks.size() < 2)
                throw ConfigError(where + ": expected 'id token:weight ...'");
            std::unordered_map<std::string, double> weights;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                std::size_t colon = toks[i].rfind(':');
                if (colon == std::string::npos || colon == 0 || colon + 1 == toks[i].size())
                    throw ConfigError(where + ": bad token:weight pair '" + toks[i] + "'");
                double w = parse_double(toks[i].substr(colon + 1), where);
                if (w <= 0) throw ConfigError(where + ": weights must be positive");
                weights[toks[i].substr(0, colon)] += w;
            }
            KeywordMultiset ks;
            ks.tokens.assign(weights.begin(), weights.end());
            std::sort(ks.tokens.begin(), ks.tokens.end());
            place(v, std::move(ks));
        }
    }

    std::size_t n = ids.external.size();
    attrs.resize(n, Point2D{});
    has_attr.resize(n, 0);
    std::string missing;
    std::size_t missing_count = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (!has_attr[v]) {
            if (++missing_count <= 10) missing += (missing.empty() ? "" : ", ") + ids.external[v];
        }
    }
    if (missing_count > 0)
        throw ConfigError("vertices without attributes: " + missing +
                          (missing_count > 10 ? ", ..." : "") + " (" +
                          std::to_string(missing_count) + " total)");

    return AttributedGraph(n, edges, std::move(attrs), std::move(ids.external));
}

std::string format_cores(const std::vector<KrCore>& cores, const AttributedGraph& g) {
    bool numeric = true;
    std::vector<long long> numeric_ids(g.size(), 0);
    for (VertexId v = 0; v < g.size() && numeric; ++v)
        numeric = parse_int64(g.external_id(v), numeric_ids[v]);

    struct Line {
        std::vector<long long> nums;
        std::vector<std::string> strs;
        std::string text;
    };
    std::vector<Line> lines;
    lines.reserve(cores.size());
    for (const KrCore& core : cores) {
        Line ln;
        if (numeric) {
            for (VertexId v : core.vertices) ln.nums.push_back(numeric_ids[v]);
            std::sort(ln.nums.begin(), ln.nums.end());
        } else {
            for (VertexId v : core.vertices) ln.strs.push_back(g.external_id(v));
            std::sort(ln.strs.begin(), ln.strs.end());
        }
        std::ostringstream os;
        os << "{\"vertices\":[";
        if (numeric) {
            for (std::size_t i = 0; i < ln.nums.size(); ++i)
                os << (i ? "," : "") << ln.nums[i];
        } else {
            for (std::size_t i = 0; i < ln.strs.size(); ++i)
                os << (i ? "," : "") << '"' << ln.strs[i] << '"';
        }
        os << "],\"size\":" << core.size() << "}";
        ln.text = os.str();
        lines.push_back(std::move(ln));
    }
    std::stable_sort(lines.begin(), lines.end(), [&](const Line& a, const Line& b) {
        std::size_t sa = std::max(a.nums.size(), a.strs.size());
        std::size_t sb = std::max(b.nums.size(), b.strs.size());
        if (sa != sb) return sa > sb;
        return numeric ? a.nums < b.nums : a.strs < b.strs;
    });
    std::string out;
    for (const Line& ln : lines) {
        out += ln.text;
        out += '\n';
    }
    return out;
}

}  // namespace krcore
