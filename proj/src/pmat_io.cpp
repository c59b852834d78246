#include "convcode/pmat_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace convcode {

PmatSyntaxError::PmatSyntaxError(std::size_t line, std::size_t column, const std::string& msg)
    : Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty() || number == 0) {
        ++number;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        Line l{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
            if (i > start) l.tokens.push_back({line.substr(start, i - start), start + 1});
        }
        if (!l.tokens.empty()) out.push_back(std::move(l));
        if (nl == std::string_view::npos) break;
    }
    return out;
}

[[noreturn]] void syntax(const Line& l, const Token& t, const std::string& msg) {
    throw PmatSyntaxError(l.number, t.column, msg);
}

[[noreturn]] void syntax_eol(const Line& l, const std::string& msg) {
    const auto& last = l.tokens.back();
    throw PmatSyntaxError(l.number, last.column + last.text.size(), msg);
}

template <class T>
T number(const Line& l, const Token& t) {
    T v{};
    const char* b = t.text.data();
    const char* e = b + t.text.size();
    if (*b == '+') syntax(l, t, "expected an integer, got '" + std::string(t.text) + "'");
    auto [p, ec] = std::from_chars(b, e, v);
    if (ec != std::errc{} || p != e) syntax(l, t, "expected an integer, got '" + std::string(t.text) + "'");
    return v;
}

std::vector<Elem> coeffs(const Line& l, std::size_t from, std::size_t to, const Field& f) {
    if (from >= to) {
        if (from < l.tokens.size()) syntax(l, l.tokens[from], "expected coefficients");
        syntax_eol(l, "expected coefficients");
    }
    std::vector<Elem> c;
    for (std::size_t i = from; i < to; ++i) {
        const auto v = number<std::uint64_t>(l, l.tokens[i]);
        if (!f.contains(v))
            throw Error(ErrorKind::FieldError, "line " + std::to_string(l.number) + ", column " +
                                                   std::to_string(l.tokens[i].column) + ": coefficient " +
                                                   std::to_string(v) + " is not in " + f.name());
        c.push_back(static_cast<Elem>(v));
    }
    if (c.size() > 1 && c.back() == 0) syntax(l, l.tokens[to - 1], "trailing zero coefficient (non-canonical)");
    return c;
}

RationalFn parse_entry(const Line& l, const Field& f, Ring ring) {
    const auto& head = l.tokens[0];
    const std::size_t n = l.tokens.size();
    if (head.text == "p") {
        return RationalFn(Poly(f, coeffs(l, 1, n, f)));
    }
    if (head.text == "l") {
        if (ring == Ring::poly) syntax(l, head, "laurent entry in a poly matrix");
        if (n < 2) syntax_eol(l, "expected minimum exponent");
        const int shift = number<int>(l, l.tokens[1]);
        Poly body(f, coeffs(l, 2, n, f));
        if (body.is_zero() && shift != 0) syntax(l, l.tokens[1], "zero entry must be written 'l 0 0'");
        return RationalFn(LaurentPoly(std::move(body), shift));
    }
    if (head.text == "r") {
        if (ring != Ring::rational) syntax(l, head, "rational entry outside a rational matrix");
        std::size_t bar = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (l.tokens[i].text == "|") bar = i;
        if (bar == 0) syntax_eol(l, "expected '|' between numerator and denominator");
        Poly num(f, coeffs(l, 1, bar, f));
        Poly den(f, coeffs(l, bar + 1, n, f));
        if (den.is_zero()) throw Error(ErrorKind::DivisionByZero, "line " + std::to_string(l.number) + ": zero denominator");
        return RationalFn(std::move(num), std::move(den));
    }
    syntax(l, head, "expected an entry ('p', 'l' or 'r'), got '" + std::string(head.text) + "'");
}

std::string join(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p.coeff(static_cast<std::size_t>(i)));
    }
    return s;
}

}  // namespace

PolyMatrix parse_pmat(std::string_view text) {
    const auto lines = tokenize(text);
    std::size_t idx = 0;
    auto next = [&](std::string_view what) -> const Line& {
        if (idx >= lines.size()) {
            const std::size_t ln = lines.empty() ? 1 : lines.back().number + 1;
            throw PmatSyntaxError(ln, 1, "expected " + std::string(what));
        }
        return lines[idx++];
    };

    const Line& fl = next("'field' header");
    if (fl.tokens[0].text != "field") syntax(fl, fl.tokens[0], "expected 'field' header");
    if (fl.tokens.size() < 2) syntax_eol(fl, "expected field characteristic");
    const auto p = number<std::uint32_t>(fl, fl.tokens[1]);
    Field f;
    try {
        if (fl.tokens.size() == 2) {
            f = Field::make(p, 1);
        } else {
            const auto m = number<unsigned>(fl, fl.tokens[2]);
            std::vector<std::uint32_t> mod;
            for (std::size_t i = 3; i < fl.tokens.size(); ++i) mod.push_back(number<std::uint32_t>(fl, fl.tokens[i]));
            if (mod.size() != m + 1) syntax_eol(fl, "expected " + std::to_string(m + 1) + " modulus coefficients");
            f = Field::make(p, m, mod);
        }
    } catch (const PmatSyntaxError&) {
        throw;
    } catch (const Error& e) {
        throw Error(ErrorKind::FieldError, "line " + std::to_string(fl.number) + ": " + e.what());
    }

    Ring ring = Ring::poly;
    const Line* sl = &next("'size' header");
    if (sl->tokens[0].text == "ring") {
        if (sl->tokens.size() != 2) syntax_eol(*sl, "expected one ring name");
        const auto r = sl->tokens[1].text;
        if (r == "poly") ring = Ring::poly;
        else if (r == "laurent") ring = Ring::laurent;
        else if (r == "rational") ring = Ring::rational;
        else syntax(*sl, sl->tokens[1], "unknown ring '" + std::string(r) + "'");
        sl = &next("'size' header");
    }
    if (sl->tokens[0].text != "size") syntax(*sl, sl->tokens[0], "expected 'size' header");
    if (sl->tokens.size() != 3) syntax_eol(*sl, "expected 'size <rows> <cols>'");
    const auto rows = number<std::size_t>(*sl, sl->tokens[1]);
    const auto cols = number<std::size_t>(*sl, sl->tokens[2]);
    if (rows > 4096 || cols > 4096) throw Error(ErrorKind::DimensionError, "matrix size too large");

    PolyMatrix m(f, ring, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        if (idx >= lines.size())
            throw Error(ErrorKind::DimensionError, "expected " + std::to_string(rows * cols) + " entries, found " + std::to_string(i));
        m(i / cols, i % cols) = parse_entry(lines[idx++], f, ring);
    }
    if (idx < lines.size())
        throw Error(ErrorKind::DimensionError, "line " + std::to_string(lines[idx].number) + ": more entries than size " +
                                                   std::to_string(rows) + "x" + std::to_string(cols));
    return m;
}

PolyMatrix read_pmat_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_pmat(ss.str());
}

std::string serialize_pmat(const PolyMatrix& m) {
    const Field& f = m.field();
    std::ostringstream out;
    out << "field " << f.characteristic();
    if (f.degree() > 1) {
        out << ' ' << f.degree();
        for (auto c : f.modulus()) out << ' ' << c;
    }
    out << "\nring " << to_string(m.ring()) << "\nsize " << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const RationalFn& e = m(i, j);
            switch (m.ring()) {
                case Ring::poly:
                    out << "p " << join(e.to_poly()) << '\n';
                    break;
                case Ring::laurent: {
                    const LaurentPoly l = e.to_laurent();
                    out << "l " << l.shift() << ' ' << join(l.body()) << '\n';
                    break;
                }
                case Ring::rational:
                    out << "r " << join(e.num()) << " | " << join(e.den()) << '\n';
                    break;
            }
        }
    return out.str();
}

}  // namespace convcode
