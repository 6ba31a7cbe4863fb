#include <algorithm>
#include <sstream>

#include "qss/jobspec.hpp"

namespace qss {

namespace {

using Row = std::vector<std::string>;

struct Table {
    std::vector<std::string> notes;   // "# " lines, shared by both formats
    Row header;
    std::vector<Row> rows;
};

std::string render(const Table& t, Format f)
{
    std::ostringstream os;
    for (const auto& n : t.notes) os << "# " << n << "\n";
    if (f == Format::Tsv) {
        auto line = [&](const Row& r) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "\t" : "") << r[i];
            os << "\n";
        };
        line(t.header);
        for (const auto& r : t.rows) line(r);
        return os.str();
    }
    std::vector<std::size_t> w(t.header.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = t.header[i].size();
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const Row& r) {
        std::string s;
        for (std::size_t i = 0; i < r.size(); ++i) {
            s += r[i];
            if (i + 1 < r.size()) s += std::string(w[i] - r[i].size() + 2, ' ');
        }
        os << s << "\n";
    };
    line(t.header);
    Row dash;
    for (auto x : w) dash.push_back(std::string(x, '-'));
    line(dash);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

std::string combination(const RatVec& coords)
{
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        Rat q = coords[i];
        if (!s.empty()) s += q < 0 ? " - " : " + ";
        else if (q < 0) s += "-";
        q = abs(q);
        s += (q == 1 ? std::string() : to_string(q) + "*") + "c" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

std::string flag(bool b) { return b ? "yes" : "no"; }

const Row kClassHeader = {"lambda_coroots", "lambda_affine", "sigma_t_type", "pi1_invariants", "a_t_order",
                          "ts_tso_order",   "isolated",      "quasi_isolated", "quasi_central"};

Row class_row(const ClassReport& r)
{
    return {combination(r.lambda),
            to_string(r.affine),
            r.sigma_t_type.to_string(),
            r.pi1.to_string(),
            std::to_string(r.A_t.size()),
            r.ts_tso.order().get_str(),
            flag(r.isolated),
            flag(r.quasi_isolated),
            flag(r.quasi_central)};
}

std::vector<std::string> context(const Twist& tw, const Classifier& c)
{
    std::vector<std::string> n;
    n.push_back("datum " + tw.datum().label() + ", twist of order " + std::to_string(tw.order()) + ", p = " +
                std::to_string(tw.p()));
    std::string simple;
    for (std::size_t i = 0; i < c.phi().simple_labels.size(); ++i)
        simple += (i ? ", " : "") + std::string("c") + std::to_string(i + 1) + " = " + c.phi().simple_labels[i] + "^vee";
    n.push_back("R(sigma) " + c.phi().type.to_string() + ", simple coroots " + simple);
    return n;
}

Table info_table(const Twist& tw, const Classifier& c)
{
    const RootDatum& d = tw.datum();
    Table t;
    t.header = {"key", "value"};
    auto add = [&](const std::string& k, const std::string& v) { t.rows.push_back({k, v}); };
    add("datum", d.label());
    add("rank", std::to_string(d.rank()));
    add("semisimple_rank", std::to_string(d.semisimple_rank()));
    add("type", d.cartan_type().to_string());
    add("fundamental_group", fundamental_group(d).to_string());
    add("twist_order", std::to_string(tw.order()));
    add("p", std::to_string(tw.p()));
    add("special_orbits", flag(tw.has_special()));
    add("sigma_type", c.sigma().type.normalized().to_string());
    add("phi_sigma_type", c.phi().type.to_string());
    add("a_r_sigma", a_R_sigma_group(c.alcove()).to_string());
    add("w_sigma_order", c.weyl_sigma_order().get_str());
    add("ts_tso", component_group_Ts(tw).to_string());
    std::string labels;
    for (std::size_t i = 0; i < c.phi().simple_labels.size(); ++i) labels += (i ? " " : "") + c.phi().simple_labels[i];
    add("simple_orbits", labels.empty() ? "-" : labels);
    return t;
}

Table alcove_table(const Classifier& c)
{
    const AlcoveData& ad = c.alcove();
    Table t;
    t.header = {"node", "kind", "mark", "vertex_coroots", "p_admissible"};
    for (std::size_t s = 0; s < ad.nodes(); ++s) {
        bool affine = s >= ad.ell;
        t.rows.push_back({std::to_string(s), affine ? "affine" : "finite", ad.marks[s].get_str(),
                          combination(ad.vertices[s]), flag(ad.admissible[s])});
    }
    for (std::size_t a = 0; a < ad.A.size(); ++a) {
        std::string perm;
        for (std::size_t s = 0; s < ad.A[a].size(); ++s) perm += (s ? " " : "") + std::to_string(ad.A[a][s]);
        t.notes.push_back("A_R(sigma) element " + std::to_string(a) + ": nodes -> " + perm);
    }
    if (!ad.admissibility_divergent.empty()) {
        std::string nodes;
        for (auto s : ad.admissibility_divergent) nodes += (nodes.empty() ? "" : " ") + std::to_string(s);
        t.notes.push_back("p-admissibility modulo Z Phi^vee differs at nodes " + nodes);
    }
    return t;
}

Table class_table(const std::vector<ClassReport>& rs)
{
    Table t;
    t.header = kClassHeader;
    for (const auto& r : rs) t.rows.push_back(class_row(r));
    return t;
}

} // namespace

JobResult run_job(const JobSpec& s)
{
    Twist tw = spec_twist(s);
    Classifier c(tw);
    Table t;
    JobResult res;
    switch (s.mode) {
    case Mode::Info:
        t = info_table(tw, c);
        break;
    case Mode::Alcove:
        t = alcove_table(c);
        break;
    case Mode::QuasiCentral: {
        std::vector<ClassReport> rs;
        for (const auto& x : quasi_central_points(c.alcove())) rs.push_back(c.report(x));
        std::sort(rs.begin(), rs.end(), report_less);
        t = class_table(rs);
        break;
    }
    case Mode::Isolated:
        t = class_table(c.enumerate_isolated());
        break;
    case Mode::QuasiIsolated:
        t = class_table(c.enumerate_quasi_isolated());
        break;
    case Mode::Classify: {
        RatVec x = parse_lambda(c, s.lambda);
        ClassReport r = c.report(x);
        t = class_table({r});
        std::string input, canon;
        for (const auto& l : c.sigma_t_labels(x)) input += (input.empty() ? "" : ", ") + l;
        for (const auto& l : r.sigma_t_positive) canon += (canon.empty() ? "" : ", ") + l;
        t.notes.push_back("input lambda " + combination(x));
        t.notes.push_back("sigma_t positive roots at input: {" + input + "}");
        t.notes.push_back("sigma_t positive roots at representative: {" + canon + "}");
        t.notes.push_back("phi_t type " + r.phi_t_type.to_string() + ", |W(t sigma)| " + r.w_order.get_str() +
                          ", denominator " + r.denominator.get_str() + ", az exponent " + r.az_exponent.get_str());
        break;
    }
    case Mode::OracleCheck: {
        OracleConfig cfg;
        cfg.N = s.oracle_bound;
        cfg.weyl_cap = s.weyl_cap;
        Oracle o(tw, s.weyl_cap);
        long N = cfg.N ? cfg.N : 2 * o.minimal_bound();
        auto dis = cross_check(c, cfg);
        t.header = {"discrepancy"};
        for (const auto& d : dis) t.rows.push_back({d});
        t.notes.push_back("oracle bound " + std::to_string(N) + ", |W^sigma| " + std::to_string(o.weyl().size()) +
                          ", " + (dis.empty() ? "agree" : "MISMATCH"));
        res.mismatch = !dis.empty();
        break;
    }
    }
    auto ctx = context(tw, c);
    t.notes.insert(t.notes.begin(), ctx.begin(), ctx.end());
    res.output = render(t, s.format);
    return res;
}

} // namespace qss
