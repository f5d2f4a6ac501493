#include "fading/graph_io.hpp"

#include <charconv>
#include <vector>

#include "fading/errors.hpp"

namespace fading {

namespace {

constexpr int bias = 63;
constexpr std::string_view g6_header = ">>graph6<<";

std::string_view trim_line_end(std::string_view s)
{
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

int sextet(std::string_view text, std::size_t pos, std::size_t offset)
{
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
        throw FormatError("graph6: invalid character at byte " + std::to_string(offset + pos), offset + pos);
    return c - bias;
}

} // namespace

Graph parse_graph6(std::string_view text)
{
    std::size_t offset = 0;
    if (text.starts_with(g6_header)) {
        text.remove_prefix(g6_header.size());
        offset = g6_header.size();
    }
    text = trim_line_end(text);
    if (text.empty())
        throw FormatError("graph6: empty input", offset);

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] == '~') {
        if (text.size() >= 2 && text[1] == '~')
            throw FormatError("graph6: orders above 258047 are not supported", offset);
        if (text.size() < 4)
            throw FormatError("graph6: truncated order header", offset + text.size());
        for (pos = 1; pos < 4; ++pos)
            n = (n << 6) | sextet(text, pos, offset);
    } else {
        n = sextet(text, 0, offset);
        pos = 1;
    }
    if (n > max_order)
        throw FormatError("graph6: order " + std::to_string(n) + " exceeds the supported maximum of " +
                              std::to_string(max_order),
                          offset);

    const long long bits = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected)
        throw FormatError("graph6: expected " + std::to_string(expected) + " bytes for order " + std::to_string(n) +
                              ", got " + std::to_string(text.size()),
                          offset + std::min(text.size(), expected));

    std::vector<Edge> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
            const int bit = 5 - static_cast<int>(k % 6);
            if ((sextet(text, byte, offset) >> bit) & 1)
                edges.emplace_back(i, j);
        }
    }
    if (bits % 6 != 0) {
        const std::size_t last = text.size() - 1;
        const int pad = static_cast<int>(6 - bits % 6);
        if (sextet(text, last, offset) & ((1 << pad) - 1))
            throw FormatError("graph6: nonzero padding bits at byte " + std::to_string(offset + last), offset + last);
    }
    return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + bias));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + bias));
    }
    int acc = 0;
    int used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + bias));
                acc = 0;
                used = 0;
            }
        }
    }
    if (used > 0)
        out.push_back(static_cast<char>((acc << (6 - used)) + bias));
    return out;
}

namespace {

bool parse_int(std::string_view& s, int& value)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr == s.data())
        return false;
    s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
    return true;
}

bool only_space(std::string_view s)
{
    return s.find_first_not_of(" \t\r") == std::string_view::npos;
}

} // namespace

Graph parse_edge_list(std::string_view text)
{
    int n = -1;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        auto nl = text.find('\n', begin);
        if (nl == std::string_view::npos)
            nl = text.size();
        std::string_view line = text.substr(begin, nl - begin);
        begin = nl + 1;
        ++line_no;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos || line[first] == '#')
            continue;
        const auto where = "edge list line " + std::to_string(line_no) + ": ";
        if (n < 0) {
            if (!parse_int(line, n) || !only_space(line) || n < 0)
                throw FormatError(where + "expected vertex count", line_no);
            if (n > max_order)
                throw FormatError(where + "order exceeds " + std::to_string(max_order), line_no);
            continue;
        }
        int u = 0;
        int v = 0;
        if (!parse_int(line, u) || !parse_int(line, v) || !only_space(line))
            throw FormatError(where + "expected \"u v\"", line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw FormatError(where + "vertex id out of range", line_no);
        if (u == v)
            throw FormatError(where + "loop at vertex " + std::to_string(u), line_no);
        edges.emplace_back(u, v);
    }
    if (n < 0)
        throw FormatError("edge list: missing vertex count", line_no);
    return Graph(n, edges);
}

std::string write_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace fading
