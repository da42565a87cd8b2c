#include "speciso/format.hpp"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>

namespace speciso {

namespace {

constexpr int kG6Min = 63;  // '?'
constexpr int kG6Max = 126; // '~'

std::string_view strip_trailing_newline(std::string_view text) {
    if (text.ends_with('\n'))
        text.remove_suffix(1);
    if (text.ends_with('\r'))
        text.remove_suffix(1);
    return text;
}

int g6_byte(std::string_view text, std::size_t offset, const char* what) {
    if (offset >= text.size())
        throw ParseError(std::string("truncated ") + what, text.size());
    const unsigned char c = static_cast<unsigned char>(text[offset]);
    if (c < kG6Min || c > kG6Max)
        throw ParseError(std::string("malformed ") + what + ": character '" +
                             std::string(1, static_cast<char>(c)) + "' outside graph6 range",
                         offset);
    return c - kG6Min;
}

// Header is either one byte (n <= 62), '~' + 3 bytes (18-bit n) or
// '~~' + 6 bytes (36-bit n).
std::uint64_t parse_g6_order(std::string_view text, std::size_t& pos) {
    if (text.empty())
        throw ParseError("empty graph6 string", 0);
    if (text[0] != '~') {
        return static_cast<std::uint64_t>(g6_byte(text, pos++, "header"));
    }
    std::size_t start = 1;
    int width = 3;
    if (text.size() > 1 && text[1] == '~') {
        start = 2;
        width = 6;
    }
    std::uint64_t n = 0;
    for (int i = 0; i < width; ++i)
        n = (n << 6) | static_cast<std::uint64_t>(g6_byte(text, start + i, "header"));
    pos = start + static_cast<std::size_t>(width);
    if (width == 3 && n < 63)
        throw ParseError("long-form header encodes n < 63", 0);
    if (width == 6 && n < 258048)
        throw ParseError("extended header encodes n < 258048", 0);
    return n;
}

} // namespace

Graph parse_graph6(std::string_view raw) {
    const std::string_view text = strip_trailing_newline(raw);
    std::size_t pos = 0;
    const std::uint64_t n64 = parse_g6_order(text, pos);

    // Validate the body length before allocating anything sized by n.
    const unsigned __int128 nbits =
        static_cast<unsigned __int128>(n64) * (n64 > 0 ? n64 - 1 : 0) / 2;
    const unsigned __int128 nbytes = (nbits + 5) / 6;
    const unsigned __int128 available = text.size() - pos;
    if (available < nbytes)
        throw ParseError("truncated bit field: need " +
                             std::to_string(static_cast<std::uint64_t>(nbytes)) +
                             " data bytes, have " +
                             std::to_string(static_cast<std::uint64_t>(available)),
                         text.size());
    if (available > nbytes)
        throw ParseError("trailing garbage after bit field",
                         pos + static_cast<std::size_t>(nbytes));

    const int n = static_cast<int>(n64);
    Graph g(n);

    // Upper triangle in column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    int bits_left = 0;
    int current = 0;
    std::size_t byte_pos = pos;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                current = g6_byte(text, byte_pos++, "bit field");
                bits_left = 6;
            }
            if (current & (1 << (bits_left - 1)))
                g.add_edge(i, j);
            --bits_left;
        }
    }
    if (bits_left > 0 && (current & ((1 << bits_left) - 1)) != 0)
        throw ParseError("nonzero padding bits", byte_pos - 1);
    return g;
}

std::string emit_graph6(const Graph& g) {
    const std::uint64_t n = static_cast<std::uint64_t>(g.order());
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(kG6Min + n));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kG6Min + ((n >> shift) & 0x3f)));
    } else {
        out.push_back('~');
        out.push_back('~');
        for (int shift = 30; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(kG6Min + ((n >> shift) & 0x3f)));
    }
    int bits = 0;
    int current = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(kG6Min + current));
                bits = 0;
                current = 0;
            }
        }
    }
    if (bits > 0)
        out.push_back(static_cast<char>(kG6Min + (current << (6 - bits))));
    return out;
}

namespace {

// Reports errors with the byte offset of the offending line.
struct LineReader {
    std::string_view text;
    std::size_t pos = 0;

    // Returns the next non-blank line and its starting offset, or false.
    bool next(std::string_view& line, std::size_t& offset) {
        while (pos < text.size()) {
            std::size_t end = text.find('\n', pos);
            if (end == std::string_view::npos)
                end = text.size();
            std::string_view candidate = text.substr(pos, end - pos);
            std::size_t start = pos;
            pos = end + 1;
            if (candidate.find_first_not_of(" \t\r") != std::string_view::npos) {
                line = candidate;
                offset = start;
                return true;
            }
        }
        return false;
    }
};

bool parse_two_ints(std::string_view line, long& a, long& b) {
    std::istringstream in{std::string(line)};
    if (!(in >> a >> b))
        return false;
    std::string rest;
    if (in >> rest)
        return false;
    return true;
}

} // namespace

Graph parse_edge_list(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    std::size_t offset = 0;
    if (!reader.next(line, offset))
        throw ParseError("missing \"n m\" header line", 0);
    long n = 0, m = 0;
    if (!parse_two_ints(line, n, m) || n < 0 || m < 0)
        throw ParseError("malformed \"n m\" header line", offset);

    Graph g(static_cast<int>(n));
    for (long e = 0; e < m; ++e) {
        if (!reader.next(line, offset))
            throw ParseError("expected " + std::to_string(m) + " edge lines, got " +
                                 std::to_string(e),
                             text.size());
        long u = 0, v = 0;
        if (!parse_two_ints(line, u, v))
            throw ParseError("malformed edge line", offset);
        if (u == v)
            throw ParseError("self-loop " + std::to_string(u) + " " + std::to_string(v) +
                                 " rejected",
                             offset);
        if (u < 1 || v < 1 || u > n || v > n)
            throw ParseError("edge endpoint out of range [1.." + std::to_string(n) + "]",
                             offset);
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    if (reader.next(line, offset))
        throw ParseError("trailing garbage after " + std::to_string(m) + " edge lines",
                         offset);
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v))
                out << (u + 1) << ' ' << (v + 1) << '\n';
    return out.str();
}

Permutation parse_permutation_line(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> image;
    long v = 0;
    while (in >> v)
        image.push_back(static_cast<int>(v));
    if (!in.eof())
        throw ParseError("non-integer token in permutation line", 0);
    for (int x : image)
        if (x < 1 || x > static_cast<long>(image.size()))
            throw InvariantError("permutation image value " + std::to_string(x) +
                                 " outside 1.." + std::to_string(image.size()));
    return Permutation::from_one_indexed(image);
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace

Graph load_graph_file(const std::string& path) {
    const std::string contents = read_file(path);
    if (path.ends_with(".g6"))
        return parse_graph6(contents);
    if (path.ends_with(".el"))
        return parse_edge_list(contents);
    throw Error("unknown graph file extension (expected .g6 or .el): " + path);
}

Permutation load_permutation_file(const std::string& path) {
    return parse_permutation_line(read_file(path));
}

} // namespace speciso
