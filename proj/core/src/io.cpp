#include "nclkit/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <vector>

#include "nclkit/error.hpp"

namespace nclkit {

namespace {

constexpr unsigned char kOffset = 63;
constexpr std::string_view kGraph6Prefix = ">>graph6<<";

struct Token {
    std::string_view text;
    int line;
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '\n') {
            ++line;
            ++i;
        } else if (c == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else {
            const std::size_t start = i;
            while (i < text.size() && text[i] != '#' && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
            out.push_back({text.substr(start, i - start), line});
        }
    }
    return out;
}

long long to_int(const Token& t) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || ptr != t.text.data() + t.text.size()) {
        throw parse_error("line " + std::to_string(t.line) + ": expected an integer, got '" +
                          std::string(t.text) + "'");
    }
    return v;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    const auto tokens = tokenize(text);
    if (tokens.size() < 2) throw parse_error("edge list: missing 'n m' header");
    const long long n = to_int(tokens[0]);
    const long long m = to_int(tokens[1]);
    if (n < 0 || n > kMaxGraphVertices) throw parse_error("edge list: vertex count out of range");
    if (m < 0) throw parse_error("edge list: negative edge count");
    if (tokens.size() != static_cast<std::size_t>(2 + 2 * m)) {
        throw parse_error("edge list: header announces " + std::to_string(m) + " edges but " +
                          std::to_string((tokens.size() - 2) / 2) + " endpoint pairs follow" +
                          (tokens.size() % 2 != 0 ? " (odd token count)" : ""));
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (std::size_t k = 2; k < tokens.size(); k += 2) {
        const long long u = to_int(tokens[k]);
        const long long v = to_int(tokens[k + 1]);
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw parse_error("line " + std::to_string(tokens[k].line) + ": vertex out of range");
        }
        if (u == v) throw parse_error("line " + std::to_string(tokens[k].line) + ": self-loop");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

std::string format_edge_list(const Graph& g, std::string_view comment) {
    std::ostringstream out;
    if (!comment.empty()) {
        std::istringstream lines{std::string(comment)};
        for (std::string line; std::getline(lines, line);) out << "# " << line << '\n';
    }
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::string encode_graph6(const Graph& g) {
    const auto n = static_cast<std::uint64_t>(g.vertex_count());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kOffset));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    } else {
        out += "~~";
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
    }
    unsigned group = 0;
    int filled = 0;
    for (Vertex j = 1; j < g.vertex_count(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kOffset));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + kOffset));
    return out;
}

Graph decode_graph6(std::string_view bytes) {
    if (bytes.starts_with(kGraph6Prefix)) bytes.remove_prefix(kGraph6Prefix.size());
    for (char c : bytes) {
        const auto u = static_cast<unsigned char>(c);
        if (u < 63 || u > 126) throw parse_error("graph6: byte " + std::to_string(u) + " outside 63..126");
    }
    const auto value = [&](std::size_t k) { return static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[k]) - kOffset); };
    std::uint64_t n = 0;
    std::size_t pos = 0;
    if (bytes.empty()) throw parse_error("graph6: empty input");
    if (bytes[0] != '~') {
        n = value(0);
        pos = 1;
    } else if (bytes.size() >= 2 && bytes[1] != '~') {
        if (bytes.size() < 4) throw parse_error("graph6: truncated size header");
        n = (value(1) << 12) | (value(2) << 6) | value(3);
        if (n < 63) throw parse_error("graph6: non-canonical size header");
        pos = 4;
    } else {
        if (bytes.size() < 8) throw parse_error("graph6: truncated size header");
        for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | value(k);
        if (n <= 258047) throw parse_error("graph6: non-canonical size header");
        pos = 8;
    }
    if (n > static_cast<std::uint64_t>(kMaxGraphVertices)) {
        throw parse_error("graph6: " + std::to_string(n) + " vertices exceeds limit " + std::to_string(kMaxGraphVertices));
    }
    const std::uint64_t bit_count = n * (n > 0 ? n - 1 : 0) / 2;
    const std::uint64_t body = (bit_count + 5) / 6;
    if (bytes.size() - pos < body) throw parse_error("graph6: truncated adjacency body");
    if (bytes.size() - pos > body) throw parse_error("graph6: trailing bytes after adjacency body");

    std::vector<Edge> edges;
    std::uint64_t bit = 0;
    for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit) {
            const auto byte = value(pos + bit / 6);
            if ((byte >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
        }
    }
    if (bit % 6 != 0) {
        const auto last = value(pos + body - 1);
        const auto pad_mask = (std::uint64_t{1} << (6 - bit % 6)) - 1;
        if (last & pad_mask) throw parse_error("graph6: non-zero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

Graph parse_graph(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) throw parse_error("empty graph input");
    const char first = text[i];
    if (std::isdigit(static_cast<unsigned char>(first)) || first == '#') return parse_edge_list(text);

    const auto eol = text.find('\n', i);
    std::string_view line = text.substr(i, eol == std::string_view::npos ? text.size() - i : eol - i);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (eol != std::string_view::npos) {
        for (std::size_t k = eol; k < text.size(); ++k) {
            if (!std::isspace(static_cast<unsigned char>(text[k]))) throw parse_error("graph6: more than one graph in input");
        }
    }
    return decode_graph6(line);
}

Graph read_graph(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw parse_error("read error");
    return parse_graph(text);
}

Graph read_graph_file(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open '" + path + "'");
    return read_graph(in);
}

}  // namespace nclkit
