#include "z2r/io.hpp"

#include <cctype>
#include <charconv>

namespace z2r {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool blank(std::string_view line) {
    for (char c : line)
        if (!is_space(c)) return false;
    return true;
}

// Reads "b b ... | r r ..." and hands each ring-side symbol to put_ring.
template <class PutRing>
void scan_row(std::string_view text, int line, int alpha, int beta, BinaryVector& bin, PutRing put_ring) {
    int bins = 0;
    int rings = 0;
    bool bar = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        const int col = static_cast<int>(i) + 1;
        if (is_space(c)) continue;
        if (!bar) {
            if (c == '|') {
                if (bins != alpha)
                    throw ParseError(line, col,
                                     "expected " + std::to_string(alpha) + " binary symbols before '|', got " +
                                         std::to_string(bins));
                bar = true;
                continue;
            }
            if (bins == alpha) throw ParseError(line, col, std::string("expected '|', got '") + c + "'");
            if (c != '0' && c != '1') throw ParseError(line, col, std::string("invalid binary symbol '") + c + "'");
            bin.set(bins++, c == '1');
            continue;
        }
        if (rings == beta) throw ParseError(line, col, "more than " + std::to_string(beta) + " ring symbols");
        put_ring(rings++, c, col);
    }
    const int end = static_cast<int>(text.size()) + 1;
    if (!bar) throw ParseError(line, end, "missing '|'");
    if (rings != beta)
        throw ParseError(line, end, "expected " + std::to_string(beta) + " ring symbols, got " + std::to_string(rings));
}

MixedWord parse_row(std::string_view text, int line, int alpha, int beta) {
    MixedWord w(alpha, beta);
    scan_row(text, line, alpha, beta, w.bin(), [&](int j, char c, int col) {
        const auto r = ring_from_symbol(c);
        if (!r) throw ParseError(line, col, std::string("invalid ring symbol '") + c + "'");
        w.ring().set(j, *r);
    });
    return w;
}

Z2Z4Word parse_z2z4_row(std::string_view text, int line, int alpha, int beta) {
    Z2Z4Word w(alpha, beta);
    scan_row(text, line, alpha, beta, w.bin(), [&](int j, char c, int col) {
        if (c < '0' || c > '3') throw ParseError(line, col, std::string("invalid Z4 symbol '") + c + "'");
        w.set(j, Z4Elem(c - '0'));
    });
    return w;
}

int parse_header_field(std::string_view token, std::string_view name, int line, int col) {
    const std::string prefix = std::string(name) + "=";
    if (token.substr(0, prefix.size()) != prefix)
        throw ParseError(line, col, "expected '" + prefix + "<int>', got '" + std::string(token) + "'");
    const std::string_view digits = token.substr(prefix.size());
    int value = -1;
    const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || p != digits.data() + digits.size() || digits.empty())
        throw ParseError(line, col + static_cast<int>(prefix.size()), "invalid integer '" + std::string(digits) + "'");
    if (value < 0 || value > kMaxCoordinates)
        throw ParseError(line, col + static_cast<int>(prefix.size()),
                         std::string(name) + " must lie in [0, " + std::to_string(kMaxCoordinates) + "]");
    return value;
}

std::pair<int, int> parse_header(std::string_view text, int line) {
    std::vector<std::pair<std::string_view, int>> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) ++i;
        const std::size_t start = i;
        while (i < text.size() && !is_space(text[i])) ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start), static_cast<int>(start) + 1);
    }
    if (tokens.size() != 2) {
        const int col = tokens.size() > 2 ? tokens[2].second : static_cast<int>(text.size()) + 1;
        throw ParseError(line, col, "header must be 'alpha=<int> beta=<int>'");
    }
    return {parse_header_field(tokens[0].first, "alpha", line, tokens[0].second),
            parse_header_field(tokens[1].first, "beta", line, tokens[1].second)};
}

// Calls header(alpha, beta) for the first nonblank line and row(text, line)
// for every later one.
template <class Header, class Row>
void scan_file(std::string_view text, Header header, Row row_fn) {
    bool have_header = false;
    int line = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        const std::string_view row = text.substr(pos, nl - pos);
        ++line;
        pos = nl + 1;
        if (blank(row)) continue;
        if (!have_header) {
            const auto [alpha, beta] = parse_header(row, line);
            header(alpha, beta);
            have_header = true;
            continue;
        }
        row_fn(row, line);
    }
    if (!have_header) throw ParseError(line == 0 ? 1 : line, 1, "missing 'alpha=<int> beta=<int>' header");
}

std::string header_line(int alpha, int beta) {
    return "alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta) + "\n";
}

}  // namespace

GenMatrix parse_code_file(std::string_view text) {
    GenMatrix g;
    scan_file(
        text, [&](int alpha, int beta) { g = GenMatrix(alpha, beta); },
        [&](std::string_view row, int line) { g.add_row(parse_row(row, line, g.alpha(), g.beta())); });
    return g;
}

Z2Z4Matrix parse_z2z4_file(std::string_view text) {
    Z2Z4Matrix m;
    scan_file(
        text,
        [&](int alpha, int beta) {
            m.alpha = alpha;
            m.beta = beta;
        },
        [&](std::string_view row, int line) { m.rows.push_back(parse_z2z4_row(row, line, m.alpha, m.beta)); });
    return m;
}

std::string emit_z2z4_file(const Z2Z4Matrix& m) {
    std::string out = header_line(m.alpha, m.beta);
    for (const auto& r : m.rows) {
        for (int i = 0; i < r.alpha(); ++i) {
            out += r.bin()[i] ? '1' : '0';
            out += ' ';
        }
        out += '|';
        for (int j = 0; j < r.beta(); ++j) {
            out += ' ';
            out += static_cast<char>('0' + r[j].value());
        }
        out += '\n';
    }
    return out;
}

std::string emit_code_file(const GenMatrix& g) {
    std::string out = header_line(g.alpha(), g.beta());
    for (const auto& r : g.rows()) out += format_word(r) + "\n";
    return out;
}

MixedWord parse_word(std::string_view text, int alpha, int beta) { return parse_row(text, 1, alpha, beta); }

std::string format_word(const MixedWord& w) {
    std::string out;
    for (int i = 0; i < w.alpha(); ++i) {
        out += w.bin()[i] ? '1' : '0';
        out += ' ';
    }
    out += '|';
    for (int j = 0; j < w.beta(); ++j) {
        out += ' ';
        out += symbol(w.ring()[j]);
    }
    return out;
}

BinaryVector parse_binary(std::string_view text) {
    std::vector<bool> bits;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (is_space(c)) continue;
        if (c != '0' && c != '1')
            throw ParseError(1, static_cast<int>(i) + 1, std::string("invalid binary symbol '") + c + "'");
        bits.push_back(c == '1');
    }
    if (bits.size() > static_cast<std::size_t>(kMaxCoordinates))
        throw ParseError(1, 1, "more than " + std::to_string(kMaxCoordinates) + " symbols");
    BinaryVector v(static_cast<int>(bits.size()));
    for (std::size_t i = 0; i < bits.size(); ++i) v.set(static_cast<int>(i), bits[i]);
    return v;
}

RingVector parse_ring(std::string_view text) {
    std::vector<RingElem> elems;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (is_space(c)) continue;
        const auto r = ring_from_symbol(c);
        if (!r) throw ParseError(1, static_cast<int>(i) + 1, std::string("invalid ring symbol '") + c + "'");
        elems.push_back(*r);
    }
    if (elems.size() > static_cast<std::size_t>(kMaxCoordinates))
        throw ParseError(1, 1, "more than " + std::to_string(kMaxCoordinates) + " symbols");
    RingVector v(static_cast<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i) v.set(static_cast<int>(i), elems[i]);
    return v;
}

RingElem parse_ring_elem(std::string_view text) {
    const RingVector v = parse_ring(text);
    if (v.length() != 1) throw ParseError(1, 1, "expected a single ring symbol");
    return v[0];
}

nlohmann::ordered_json to_json(const CodeType& t) { return nlohmann::ordered_json::array({t.gamma, t.delta, t.kappa}); }

nlohmann::ordered_json to_json(const WeightEnumerator& w) { return {{"n", w.n}, {"coeffs", w.coeffs}}; }

nlohmann::ordered_json to_json(const GenMatrix& g) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : g.rows()) rows.push_back(format_word(r));
    return rows;
}

nlohmann::ordered_json to_json(const SearchResult& r) {
    nlohmann::ordered_json j;
    j["alpha"] = r.type.alpha;
    j["beta"] = r.type.beta;
    j["type"] = to_json(r.type);
    j["selfdual_type"] = to_string(r.selfdual_type);
    j["separable"] = r.separable;
    j["enumerator"] = to_json(r.enumerator);
    j["matrix"] = to_json(r.matrix);
    return j;
}

std::string emit_json(const SearchResult& r) { return to_json(r).dump(); }

}  // namespace z2r
