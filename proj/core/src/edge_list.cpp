#include "svid/edge_list.hpp"

#include "svid/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace svid {

namespace {

bool is_blank(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
}

std::string_view next_token(std::string_view& rest) {
    std::size_t i = 0;
    while (i < rest.size() && is_blank(rest[i])) ++i;
    std::size_t j = i;
    while (j < rest.size() && !is_blank(rest[j])) ++j;
    auto token = rest.substr(i, j - i);
    rest.remove_prefix(j);
    return token;
}

std::int64_t parse_label(std::string_view token, std::size_t line_no) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("expected integer node label, got '" + std::string(token) + "'", line_no);
    }
    return value;
}

} // namespace

EdgeListReport parse_edge_list(std::istream& in) {
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    EdgeListReport report;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view rest(line);
        auto first = next_token(rest);
        if (first.empty() || first.front() == '#') continue;
        auto second = next_token(rest);
        if (second.empty()) {
            throw ParseError("expected two node labels", line_no);
        }
        if (!next_token(rest).empty()) {
            throw ParseError("trailing content after edge", line_no);
        }
        const auto a = parse_label(first, line_no);
        const auto b = parse_label(second, line_no);
        if (a == b) {
            ++report.self_loops;
            continue;
        }
        raw.emplace_back(std::min(a, b), std::max(a, b));
    }
    if (in.bad()) {
        throw ParseError("read failure");
    }

    std::sort(raw.begin(), raw.end());
    const auto unique_end = std::unique(raw.begin(), raw.end());
    report.duplicate_edges = static_cast<std::size_t>(raw.end() - unique_end);
    raw.erase(unique_end, raw.end());
    if (raw.empty()) {
        throw DomainError("edge list contains no usable edges");
    }

    std::vector<std::int64_t> labels;
    labels.reserve(raw.size() * 2);
    for (auto [a, b] : raw) {
        labels.push_back(a);
        labels.push_back(b);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

    auto id_of = [&labels](std::int64_t label) {
        return static_cast<NodeId>(std::lower_bound(labels.begin(), labels.end(), label) -
                                   labels.begin());
    };
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw) {
        edges.emplace_back(id_of(a), id_of(b));
    }
    const std::size_t n = labels.size();
    report.graph = Graph::from_edges(n, edges, std::move(labels));
    return report;
}

EdgeListReport read_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open edge list '" + path.string() + "'");
    }
    try {
        return parse_edge_list(in);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), e.line(), path.string());
    }
}

void write_edge_list(const Graph& g, std::ostream& out) {
    std::vector<std::pair<std::int64_t, std::int64_t>> rows;
    rows.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) {
        const auto a = g.label(u);
        const auto b = g.label(v);
        rows.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(rows.begin(), rows.end());
    for (auto [a, b] : rows) {
        out << a << ' ' << b << '\n';
    }
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path.string() + "' for writing");
    }
    write_edge_list(g, out);
    out.flush();
    if (!out) {
        throw std::runtime_error("write failure on '" + path.string() + "'");
    }
}

} // namespace svid
