#include "pfu/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace pfu {

namespace {

constexpr int g6_bias = 63;

int decode_char(char c)
{
    int value = static_cast<unsigned char>(c) - g6_bias;
    if (value < 0 || value > 63) throw GraphError(std::string("graph6: invalid character '") + c + "'");
    return value;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

}  // namespace

Graph parse_graph6(std::string_view text)
{
    if (text.empty()) throw GraphError("graph6: empty input");

    std::size_t pos = 0;
    int n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~') throw GraphError("graph6: orders above 258047 are unsupported");
        if (text.size() < 4) throw GraphError("graph6: truncated length prefix");
        n = (decode_char(text[1]) << 12) | (decode_char(text[2]) << 6) | decode_char(text[3]);
        if (n < 63) throw GraphError("graph6: non-canonical long length prefix");
        pos = 4;
    } else {
        n = decode_char(text[0]);
        pos = 1;
    }
    if (n < 1 || n > max_order) throw GraphError("graph6: order " + std::to_string(n) + " outside 1.." + std::to_string(max_order));

    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t body = (pairs + 5) / 6;
    if (text.size() - pos != body)
        throw GraphError("graph6: expected " + std::to_string(body) + " data bytes, found " + std::to_string(text.size() - pos));

    std::vector<std::pair<int, int>> edges;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int chunk = decode_char(text[pos + bit / 6]);
            if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    if (bit % 6 != 0) {
        int last = decode_char(text[pos + bit / 6]);
        int padding_mask = (1 << (6 - bit % 6)) - 1;
        if (last & padding_mask) throw GraphError("graph6: nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + g6_bias));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + g6_bias));
        out.push_back(static_cast<char>(((n >> 6) & 63) + g6_bias));
        out.push_back(static_cast<char>((n & 63) + g6_bias));
    }
    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + g6_bias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + g6_bias));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    long long n = 0;
    long long m = 0;
    if (!(in >> n >> m)) throw GraphError("edge list: missing 'n m' header");
    if (n < 1 || n > max_order) throw GraphError("edge list: order " + std::to_string(n) + " outside 1.." + std::to_string(max_order));
    if (m < 0) throw GraphError("edge list: negative edge count");
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        long long u = 0;
        long long v = 0;
        if (!(in >> u >> v)) throw GraphError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge list: edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string rest;
    if (in >> rest) throw GraphError("edge list: trailing content '" + rest + "'");
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream os;
    auto es = g.edges();
    os << g.order() << ' ' << es.size() << '\n';
    for (auto e : es) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

std::vector<Graph> read_graphs(std::istream& in)
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string all = buffer.str();

    std::istringstream lines(all);
    std::string line;
    std::vector<std::string> storage;
    while (std::getline(lines, line)) {
        auto t = trim(line);
        if (!t.empty()) storage.emplace_back(t);
    }
    if (storage.empty()) throw GraphError("no graph in input");

    // "n m" header marks an edge list.
    std::istringstream head(storage.front());
    long long a = 0;
    long long b = 0;
    std::string extra;
    if ((head >> a >> b) && !(head >> extra)) return {parse_edge_list(all)};

    std::vector<Graph> out;
    for (const auto& s : storage) {
        std::string_view sv = s;
        if (sv.starts_with(">>graph6<<")) sv.remove_prefix(10);
        out.push_back(parse_graph6(sv));
    }
    return out;
}

std::vector<Graph> read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open '" + path + "'");
    return read_graphs(in);
}

}  // namespace pfu
