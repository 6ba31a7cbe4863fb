#include "qss/jobspec.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace qss {

namespace {

const std::vector<std::pair<Mode, const char*>> kModes = {
    {Mode::Info, "info"},           {Mode::Alcove, "alcove"},     {Mode::QuasiCentral, "quasi-central"},
    {Mode::Isolated, "isolated"},   {Mode::QuasiIsolated, "quasi-isolated"},
    {Mode::Classify, "classify"},   {Mode::OracleCheck, "oracle-check"},
};

std::string trim(const std::string& s)
{
    std::size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

[[noreturn]] void fail(const std::string& where, const std::string& msg)
{
    throw Error(ErrorCode::ParseError, where.empty() ? msg : where + ": " + msg);
}

long parse_long(const std::string& v, const std::string& where)
{
    try {
        std::size_t n = 0;
        long x = std::stol(v, &n);
        if (n != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        fail(where, "expected an integer, got '" + v + "'");
    }
}

Rat parse_rat(const std::string& v, const std::string& where)
{
    std::string t = trim(v);
    if (t.empty()) fail(where, "empty number");
    for (char ch : t)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/' && ch != '-' && ch != '+')
            fail(where, "bad rational '" + t + "'");
    if (t[0] == '+') t = t.substr(1);
    Rat q;
    if (q.set_str(t, 10) != 0) fail(where, "bad rational '" + t + "'");
    if (q.get_den() == 0) fail(where, "zero denominator in '" + t + "'");
    q.canonicalize();
    return q;
}

std::vector<std::vector<std::string>> split_rows(const std::string& v)
{
    std::string t;
    for (char ch : v)
        if (ch != '[' && ch != ']') t += ch == ',' ? ' ' : ch;
    std::vector<std::vector<std::string>> rows;
    std::stringstream ss(t);
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::stringstream rs(row);
        std::vector<std::string> r;
        std::string x;
        while (rs >> x) r.push_back(x);
        if (!r.empty()) rows.push_back(r);
    }
    return rows;
}

IntMatrix parse_matrix(const std::string& v, const std::string& where)
{
    auto rows = split_rows(v);
    if (rows.empty()) fail(where, "empty matrix");
    IntMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) fail(where, "row " + std::to_string(i + 1) + " has the wrong length");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parse_long(rows[i][j], where);
    }
    return m;
}

std::vector<RatVec> parse_rat_rows(const std::string& v, const std::string& where)
{
    std::vector<RatVec> out;
    for (const auto& r : split_rows(v)) {
        RatVec x;
        for (const auto& e : r) x.push_back(parse_rat(e, where));
        out.push_back(x);
    }
    return out;
}

std::string matrix_text(const IntMatrix& m)
{
    std::string s;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).get_str();
    }
    return s;
}

bool looks_like_matrix(const std::string& v)
{
    return !v.empty() && (std::isdigit(static_cast<unsigned char>(v[0])) || v[0] == '-' || v[0] == '[');
}

} // namespace

const char* mode_name(Mode m)
{
    for (const auto& [k, n] : kModes)
        if (k == m) return n;
    return "?";
}

const char* format_name(Format f) { return f == Format::Tsv ? "tsv" : "pretty"; }

bool JobSpec::operator==(const JobSpec& o) const
{
    return preset == o.preset && rank == o.rank && type == o.type && isogeny == o.isogeny &&
           x_generators == o.x_generators && roots == o.roots && coroots == o.coroots && twist == o.twist &&
           twist_matrix == o.twist_matrix && p == o.p && mode == o.mode && lambda == o.lambda && format == o.format &&
           oracle_bound == o.oracle_bound && weyl_cap == o.weyl_cap;
}

void set_key(JobSpec& s, const std::string& key_in, const std::string& value_in, const std::string& where_in)
{
    std::string key = trim(key_in), v = trim(value_in);
    std::string where = where_in.empty() ? key : where_in + ", " + key;
    if (key == "preset") {
        if (v.empty()) fail(where, "empty preset");
        s.preset = v;
    } else if (key == "rank") {
        long r = parse_long(v, where);
        if (r < 0) fail(where, "negative rank");
        s.rank = static_cast<int>(r);
    } else if (key == "type") {
        s.type = v;
    } else if (key == "isogeny") {
        if (v != "sc" && v != "ad" && v != "custom") fail(where, "expected sc, ad or custom");
        s.isogeny = v;
    } else if (key == "x_generators") {
        s.x_generators = parse_rat_rows(v, where);
    } else if (key == "simple_roots") {
        s.roots = parse_matrix(v, where);
    } else if (key == "simple_coroots") {
        s.coroots = parse_matrix(v, where);
    } else if (key == "twist") {
        if (looks_like_matrix(v)) {
            s.twist_matrix = parse_matrix(v, where);
            s.twist.clear();
        } else {
            s.twist = v;
            s.twist_matrix.reset();
        }
    } else if (key == "p") {
        s.p = parse_long(v, where);
    } else if (key == "mode") {
        auto it = std::find_if(kModes.begin(), kModes.end(), [&](const auto& m) { return v == m.second; });
        if (it == kModes.end()) fail(where, "unknown mode '" + v + "'");
        s.mode = it->first;
    } else if (key == "lambda") {
        s.lambda = v;
    } else if (key == "format") {
        if (v == "pretty") s.format = Format::Pretty;
        else if (v == "tsv") s.format = Format::Tsv;
        else fail(where, "unknown format '" + v + "'");
    } else if (key == "oracle_bound") {
        long n = parse_long(v, where);
        if (n < 0) fail(where, "negative bound");
        s.oracle_bound = n;
    } else if (key == "weyl_cap") {
        long n = parse_long(v, where);
        if (n <= 0) fail(where, "cap must be positive");
        s.weyl_cap = static_cast<std::size_t>(n);
    } else {
        fail(where_in, "unknown key '" + key + "'");
    }
}

JobSpec parse_spec(const std::string& text)
{
    JobSpec s;
    std::stringstream ss(text);
    std::string line;
    std::set<std::string> seen;
    for (int n = 1; std::getline(ss, line); ++n) {
        std::string where = "line " + std::to_string(n);
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (trim(line).empty()) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos) fail(where, "expected 'key: value'");
        std::string key = trim(line.substr(0, colon));
        if (!seen.insert(key).second) fail(where, "duplicate key '" + key + "'");
        set_key(s, key, line.substr(colon + 1), where);
    }
    return s;
}

std::string serialize(const JobSpec& s)
{
    std::string out;
    auto put = [&](const std::string& k, const std::string& v) { out += k + ": " + v + "\n"; };
    if (!s.preset.empty()) put("preset", s.preset);
    if (s.rank) put("rank", std::to_string(s.rank));
    if (!s.type.empty()) put("type", s.type);
    if (!s.isogeny.empty()) put("isogeny", s.isogeny);
    if (!s.x_generators.empty()) {
        std::string v;
        for (std::size_t i = 0; i < s.x_generators.size(); ++i) {
            if (i) v += "; ";
            for (std::size_t j = 0; j < s.x_generators[i].size(); ++j)
                v += (j ? " " : "") + to_string(s.x_generators[i][j]);
        }
        put("x_generators", v);
    }
    if (s.roots) put("simple_roots", matrix_text(*s.roots));
    if (s.coroots) put("simple_coroots", matrix_text(*s.coroots));
    if (s.twist_matrix) put("twist", matrix_text(*s.twist_matrix));
    else if (!s.twist.empty()) put("twist", s.twist);
    put("p", std::to_string(s.p));
    put("mode", mode_name(s.mode));
    if (!s.lambda.empty()) put("lambda", s.lambda);
    put("format", format_name(s.format));
    put("oracle_bound", std::to_string(s.oracle_bound));
    put("weyl_cap", std::to_string(s.weyl_cap));
    return out;
}

RootDatum spec_datum(const JobSpec& s)
{
    int sources = !s.preset.empty() + !s.type.empty() + (s.roots || s.coroots);
    if (sources == 0) throw Error(ErrorCode::ParseError, "no datum: give preset, type or simple_roots/simple_coroots");
    if (sources > 1) throw Error(ErrorCode::ParseError, "more than one datum source");
    if (!s.preset.empty()) return preset_datum(s.preset, s.rank);
    if (!s.type.empty()) {
        IsogenySpec iso;
        std::string kind = s.isogeny.empty() ? (s.x_generators.empty() ? "sc" : "custom") : s.isogeny;
        if (kind == "ad") iso.kind = IsogenySpec::Adjoint;
        else if (kind == "custom") {
            iso.kind = IsogenySpec::Intermediate;
            iso.generators = s.x_generators;
        } else if (!s.x_generators.empty()) {
            throw Error(ErrorCode::ParseError, "x_generators given with isogeny sc");
        }
        RootDatum d = build_datum(CartanType::parse(s.type), iso);
        if (s.rank && static_cast<std::size_t>(s.rank) != d.rank())
            throw Error(ErrorCode::InvalidArgument, "rank does not match type " + s.type);
        return d;
    }
    if (!s.roots || !s.coroots) throw Error(ErrorCode::ParseError, "simple_roots and simple_coroots go together");
    if (s.rank && static_cast<std::size_t>(s.rank) != s.roots->cols())
        throw Error(ErrorCode::InvalidArgument, "rank does not match simple_roots");
    if (s.roots->rows() != s.coroots->rows() || s.roots->cols() != s.coroots->cols())
        throw Error(ErrorCode::InvalidArgument, "simple_roots and simple_coroots differ in shape");
    return RootDatum(*s.roots, *s.coroots, "explicit");
}

Twist spec_twist(const JobSpec& s)
{
    RootDatum d = spec_datum(s);
    if (s.twist_matrix) return attach_twist(d, *s.twist_matrix, s.p);
    std::string name = s.twist;
    if (name.empty() && !s.preset.empty()) name = preset_default_twist(s.preset);
    if (name.empty()) name = "identity";
    return attach_twist(d, named_twist(d, name), s.p);
}

RatVec parse_lambda(const Classifier& c, const std::string& text)
{
    const Twist& tw = c.twist();
    const PhiSystem& ps = c.phi();
    std::size_t l = ps.rank(), r = tw.datum().rank();
    std::string t = trim(text);
    auto from_ambient = [&](const RatVec& y) {
        if (tw.pi_Y(y) != y) throw Error(ErrorCode::NotStable, "lambda " + to_string(y) + " is not sigma-invariant");
        return ps.to_coords(y);
    };
    if (t.empty()) return RatVec(l);
    auto tuple = [&](const std::string& body, std::size_t n, const std::string& what) {
        auto rows = split_rows(body);
        RatVec v;
        if (rows.size() == 1)
            for (const auto& e : rows[0]) v.push_back(parse_rat(e, "lambda"));
        if (v.size() != n)
            throw Error(ErrorCode::ParseError, "lambda: expected " + std::to_string(n) + " entries for " + what);
        return v;
    };
    if (t.size() >= 2 && t[0] == 'Y' && t[1] == '(' && t.back() == ')')
        return from_ambient(tuple(t.substr(2, t.size() - 3), r, "Y (x) Q"));
    if (t[0] == '(' || t[0] == '[') {
        char close = t[0] == '(' ? ')' : ']';
        if (t.back() != close) throw Error(ErrorCode::ParseError, "lambda: unbalanced brackets");
        RatVec v = tuple(t.substr(1, t.size() - 2), c.lattices().Y_sigma.rank(), "the Y_sigma basis");
        auto basis = c.lattices().Y_sigma.basis();
        RatVec y(r);
        for (std::size_t j = 0; j < v.size(); ++j)
            for (std::size_t i = 0; i < r; ++i) y[i] += v[j] * basis[j][i];
        return from_ambient(y);
    }
    // sum of terms coef*label
    RatVec coords(l), amb(r);
    std::string s;
    for (char ch : t)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "0") return coords;
    std::size_t i = 0;
    while (i < s.size()) {
        Rat sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            if (s[i] == '-') sign = -1;
            ++i;
        } else if (i != 0) {
            throw Error(ErrorCode::ParseError, "lambda: expected + or - at position " + std::to_string(i));
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        i = j;
        std::size_t star = term.find('*');
        Rat coef = 1;
        std::string label = term;
        if (star != std::string::npos) {
            coef = parse_rat(term.substr(0, star), "lambda");
            label = term.substr(star + 1);
        }
        if (label.size() < 2 || std::string("wca").find(label[0]) == std::string::npos)
            throw Error(ErrorCode::ParseError, "lambda: bad term '" + term + "'");
        long k = parse_long(label.substr(1), "lambda");
        char kind = label[0];
        std::size_t limit = kind == 'a' ? tw.datum().semisimple_rank() : l;
        if (k < 1 || static_cast<std::size_t>(k) > limit)
            throw Error(ErrorCode::ParseError, "lambda: index out of range in '" + term + "'");
        coef *= sign;
        if (kind == 'w')
            for (std::size_t a = 0; a < l; ++a) coords[a] += coef * c.alcove().coweights[k - 1][a];
        else if (kind == 'c')
            coords[k - 1] += coef;
        else
            for (std::size_t a = 0; a < r; ++a) amb[a] += coef * Rat(tw.datum().simple_coroots()(k - 1, a));
    }
    if (amb != RatVec(r)) {
        RatVec extra = from_ambient(amb);
        for (std::size_t a = 0; a < l; ++a) coords[a] += extra[a];
    }
    return coords;
}

} // namespace qss
