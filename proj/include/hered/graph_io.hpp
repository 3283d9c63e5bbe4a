#ifndef HERED_GRAPH_IO_HPP
#define HERED_GRAPH_IO_HPP

#include "hered/graph.hpp"

#include <charconv>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace hered {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// graph6: order N(n) then the upper triangle in column order
// (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six bits per byte,
// big-endian within each byte, each byte offset by 63.

inline std::string to_graph6(const Graph &g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header)) text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty graph6 string");
    for (char c : text)
        if (c < 63 || c > 126) throw ParseError("graph6 byte out of range in \"" + std::string(text) + "\"");

    std::size_t pos = 0;
    long n = text[pos++] - 63;
    if (n == 63) {
        if (text.size() < 4) throw ParseError("truncated graph6 order field");
        if (text[1] == 126) throw ParseError("graph6 orders above 258047 are not supported");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | (text[pos++] - 63);
    }
    if (n > kMaxVertices)
        throw ParseError("graph6 order " + std::to_string(n) + " exceeds the vertex cap of " +
                         std::to_string(kMaxVertices));

    const long bits = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected)
        throw ParseError("graph6 string \"" + std::string(text) + "\" has length " +
                         std::to_string(text.size()) + ", expected " + std::to_string(expected));

    std::vector<std::pair<int, int>> edges;
    long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        int byte = text.back() - 63;
        if (byte & ((1 << (6 - bits % 6)) - 1)) throw ParseError("nonzero padding bits in graph6 string");
    }
    return Graph::from_edges(static_cast<int>(n), std::span<const std::pair<int, int>>(edges));
}

/// Edge-list text: first line "n", then one "u v" pair per line, 0-indexed.
inline std::string to_edge_list(const Graph &g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

inline Graph from_edge_list(std::istream &in) {
    int n = -1;
    if (!(in >> n) || n < 0) throw ParseError("edge list must start with a nonnegative vertex count");
    if (n > kMaxVertices) throw ParseError("edge list order exceeds the vertex cap");
    std::vector<std::pair<int, int>> edges;
    int u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) throw ParseError("edge list has a dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("invalid edge " + std::to_string(u) + " " + std::to_string(v));
        edges.emplace_back(u, v);
    }
    if (!in.eof()) throw ParseError("malformed edge list");
    return Graph::from_edges(n, std::span<const std::pair<int, int>>(edges));
}

inline Graph from_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return from_edge_list(in);
}

namespace detail {

inline std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    while (true) {
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc() || ptr == s.data()) return {};
        out.push_back(value);
        s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
        if (s.empty()) return out;
        if (s.front() != ',') return {};
        s.remove_prefix(1);
    }
}

}  // namespace detail

/// Named graphs: "K3" (clique), "K2,2,2" (complete multipartite), "C5"
/// (cycle), "P4" (path on 4 vertices), "E3" (edgeless). Returns false if
/// `name` is not in the grammar.
inline bool try_parse_named_graph(std::string_view name, Graph &out) {
    if (name.size() < 2) return false;
    char kind = name.front();
    if (kind != 'K' && kind != 'C' && kind != 'P' && kind != 'E') return false;
    auto sizes = detail::parse_int_list(name.substr(1));
    if (sizes.empty()) return false;
    if (kind != 'K' && sizes.size() != 1) return false;
    for (int s : sizes)
        if (s < 0 || s > kMaxVertices) throw ParseError("graph name \"" + std::string(name) + "\" out of range");
    switch (kind) {
    case 'K':
        out = sizes.size() == 1 ? complete_graph(sizes[0]) : complete_multipartite(std::span<const int>(sizes));
        return true;
    case 'C':
        if (sizes[0] < 3) throw ParseError("cycle \"" + std::string(name) + "\" needs at least 3 vertices");
        out = cycle_graph(sizes[0]);
        return true;
    case 'P':
        out = path_graph(sizes[0]);
        return true;
    default:
        out = edgeless_graph(sizes[0]);
        return true;
    }
}

/// A graph name from the naming grammar, or else a graph6 string. Names take
/// precedence over graph6 strings that happen to spell a name.
inline Graph parse_graph(std::string_view spec) {
    Graph g;
    if (try_parse_named_graph(spec, g)) return g;
    try {
        return from_graph6(spec);
    } catch (const ParseError &e) {
        throw ParseError("\"" + std::string(spec) + "\" is neither a graph name nor valid graph6 (" + e.what() + ")");
    } catch (const GraphError &e) {
        throw ParseError("\"" + std::string(spec) + "\": " + e.what());
    }
}

}  // namespace hered

#endif
