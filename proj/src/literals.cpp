#include "umdnorms/literals.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace umdnorms {

namespace {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw ParseError("parse error at '" + s + "'");
    return v;
}

double parse_double(const std::string& s) {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw ParseError("parse error at '" + s + "'");
    return v;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

NormedSpace parse_space(const std::string& literal) {
    std::string text = literal;
    Field field = Field::complex_field;
    if (text.size() > 5 && text.substr(text.size() - 5) == ",real") {
        field = Field::real;
        text = text.substr(0, text.size() - 5);
    }
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw ParseError("parse error at '" + literal + "': expected kind:args");
    std::string kind = text.substr(0, colon), args = text.substr(colon + 1);
    if (kind == "l1") return NormedSpace::lp(parse_int(args), 1.0, field);
    if (kind == "l2") return NormedSpace::lp(parse_int(args), 2.0, field);
    if (kind == "linf")
        return NormedSpace::lp(parse_int(args), std::numeric_limits<double>::infinity(), field);
    if (kind == "wlp") {
        double p = 0.0;
        std::vector<double> weights;
        for (const std::string& part : split(args, ',')) {
            auto eq = part.find('=');
            if (eq == std::string::npos) throw ParseError("parse error at '" + part + "'");
            std::string key = part.substr(0, eq), val = part.substr(eq + 1);
            if (key == "p")
                p = val == "inf" ? std::numeric_limits<double>::infinity() : parse_double(val);
            else if (key == "w")
                for (const std::string& w : split(val, ';')) weights.push_back(parse_double(w));
            else
                throw ParseError("parse error at '" + key + "'");
        }
        return NormedSpace::weighted_lp(static_cast<int>(weights.size()), p, weights, field);
    }
    throw ParseError("parse error at '" + literal + "': unknown space kind");
}

SystemRef parse_system(const std::string& literal) {
    auto colon = literal.find(':');
    if (colon == std::string::npos)
        throw ParseError("parse error at '" + literal + "': expected kind:n");
    std::string kind = literal.substr(0, colon), args = literal.substr(colon + 1);

    auto base = [&](const std::string& k, const std::string& a) -> TrigSystem {
        if (k == "E") return TrigSystem::exponential(parse_int(a));
        if (k == "C") return TrigSystem::cosine(parse_int(a));
        if (k == "S") return TrigSystem::sine(parse_int(a));
        if (k == "Ebar") return TrigSystem::exponential(parse_int(a)).conjugate();
        if (k == "Erange") {
            auto dots = a.find("..");
            if (dots == std::string::npos) throw ParseError("parse error at '" + a + "'");
            return TrigSystem::exponential_range(parse_int(a.substr(0, dots)),
                                                 parse_int(a.substr(dots + 2)));
        }
        throw ParseError("parse error at '" + k + "': unknown system kind");
    };

    auto x = kind.find('x');
    if (x != std::string::npos && kind != "Erange") {
        std::string lk = kind.substr(0, x), rk = kind.substr(x + 1);
        return tensor(base(lk, args), base(rk, args));
    }
    return base(kind, args);
}

int system_size(const SystemRef& ref) {
    return std::visit([](const auto& s) { return s.size(); }, ref);
}

int system_max_frequency(const SystemRef& ref) {
    if (const TrigSystem* s = std::get_if<TrigSystem>(&ref)) return s->max_frequency();
    const TensorSystem& t = std::get<TensorSystem>(ref);
    return std::max(t.left().max_frequency(), t.right().max_frequency());
}

std::string system_describe(const SystemRef& ref) {
    return std::visit([](const auto& s) { return s.describe(); }, ref);
}

Complex parse_complex(const std::string& text) {
    std::string s = trim(text);
    if (s.empty()) throw ParseError("parse error: empty complex literal");
    // a+bi / a-bi / bi / a
    if (s.back() == 'i' || s.back() == 'j') {
        std::string body = s.substr(0, s.size() - 1);
        // find the split sign (not at position 0, not after an exponent e/E)
        for (size_t k = body.size(); k-- > 1;) {
            char c = body[k];
            if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
                double re = parse_double(body.substr(0, k));
                std::string imtext = body.substr(k);
                double im = imtext == "+" ? 1.0 : imtext == "-" ? -1.0 : parse_double(imtext);
                return Complex(re, im);
            }
        }
        if (body.empty() || body == "+") return Complex(0.0, 1.0);
        if (body == "-") return Complex(0.0, -1.0);
        return Complex(0.0, parse_double(body));
    }
    return Complex(parse_double(s), 0.0);
}

std::string format_complex(const Complex& z) {
    std::ostringstream os;
    os.precision(17);
    if (z.imag() == 0.0) {
        os << z.real();
    } else {
        os << z.real() << (z.imag() >= 0 ? "+" : "-") << std::abs(z.imag()) << "i";
    }
    return os.str();
}

namespace {

std::vector<std::vector<Complex>> read_complex_rows(std::istream& in) {
    std::vector<std::vector<Complex>> rows;
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        std::vector<Complex> row;
        for (const std::string& cell : split(line, ',')) row.push_back(parse_complex(cell));
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat rows_to_matrix(const std::vector<std::vector<Complex>>& rows) {
    if (rows.empty()) throw ParseError("parse error: empty matrix");
    size_t cols = rows[0].size();
    Mat m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ParseError("parse error: ragged rows");
        for (size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

}  // namespace

Mat read_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("parse error: cannot open '" + path + "'");
    return rows_to_matrix(read_complex_rows(in));
}

std::vector<Vec> read_tuple_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("parse error: cannot open '" + path + "'");
    auto rows = read_complex_rows(in);
    std::vector<Vec> tuple;
    for (const auto& row : rows) {
        Vec v(row.size());
        for (size_t i = 0; i < row.size(); ++i) v[i] = row[i];
        tuple.push_back(std::move(v));
    }
    return tuple;
}

std::vector<Vec> parse_tuple_inline(const std::string& text) {
    // [[1,2],[3+1i,4]]
    std::vector<Vec> tuple;
    std::vector<Complex> current;
    std::string cell;
    int depth = 0;
    auto flush_cell = [&]() {
        std::string t = trim(cell);
        if (!t.empty()) current.push_back(parse_complex(t));
        cell.clear();
    };
    for (char c : text) {
        if (c == '[') {
            ++depth;
        } else if (c == ']') {
            flush_cell();
            if (depth == 2) {
                Vec v(current.size());
                for (size_t i = 0; i < current.size(); ++i) v[i] = current[i];
                tuple.push_back(std::move(v));
                current.clear();
            }
            --depth;
        } else if (c == ',' && depth == 2) {
            flush_cell();
        } else if (depth == 2) {
            cell += c;
        }
    }
    if (depth != 0) throw ParseError("parse error: unbalanced brackets");
    return tuple;
}

}  // namespace umdnorms
