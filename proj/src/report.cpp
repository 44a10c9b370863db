#include "qaff/report.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace qaff {

namespace {

Json vec_json(const Vec& v) { return Json(v); }

Json vecs_json(const std::vector<Vec>& vs) {
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(vec_json(v));
    return a;
}

Json mat_json(const Mat& m) { return vecs_json(m); }

Json checks_json(const CheckList& c) {
    Json a = Json::array();
    for (const auto& x : c.checks) a.push_back({{"name", x.name}, {"pass", x.pass}, {"detail", x.detail}});
    return a;
}

std::string pad(const std::string& s, size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

std::string roots_str(const CartanDatum& d, const std::vector<Vec>& vs) {
    std::string s;
    for (size_t i = 0; i < vs.size(); ++i) s += (i ? ", " : "") + d.root(vs[i]);
    return s;
}

void push_matrix(std::vector<std::string>& out, const Mat& m) {
    for (const auto& row : m) {
        std::ostringstream os;
        os << "    ";
        for (auto x : row) os << std::setw(4) << x;
        out.push_back(os.str());
    }
}

std::string u_str(const std::optional<int>& u) { return u ? "q^" + std::to_string(*u) : "-"; }

}  // namespace

Json to_json(const Report& r) {
    Json j;
    j["version"] = tool_version;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["results"] = r.results;
    j["diagnostics"] = r.diagnostics;
    j["verdict"] = r.verdict;
    return j;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "qaff " << tool_version << "  " << r.command;
    for (const auto& [k, v] : r.inputs.items()) os << "  " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
    os << "\n";
    for (const auto& line : r.text) os << line << "\n";
    for (const auto& d : r.diagnostics) os << "note: " << d << "\n";
    os << "verdict: " << r.verdict << "\n";
    return os.str();
}

int exit_code(const Report& r) { return r.verdict == "fail" ? 1 : 0; }

std::vector<Vec> parse_degrees(const std::string& s, int size) {
    std::vector<Vec> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        Vec v;
        std::stringstream parts(tok);
        std::string p;
        while (std::getline(parts, p, ',')) {
            try {
                size_t used = 0;
                v.push_back(std::stoll(p, &used));
                if (used != p.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("bad coefficient '" + p + "' in degree " + tok);
            }
        }
        if (static_cast<int>(v.size()) != size)
            throw std::invalid_argument("degree " + tok + " needs " + std::to_string(size) + " coefficients");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty degree list");
    return out;
}

Report cmd_datum(const TypeLabel& t) {
    const auto& d = datum(t);
    Report r;
    r.command = "datum";
    r.inputs["type"] = to_string(t);
    auto& res = r.results;
    res["type"] = to_string(t);
    res["pretty"] = pretty(t);
    res["cartan"] = mat_json(d.cartan);
    res["form"] = mat_json(d.form);
    r.text.push_back("type " + pretty(t));
    r.text.push_back("  Cartan matrix");
    push_matrix(r.text, d.cartan);
    r.text.push_back("  symmetrized form");
    push_matrix(r.text, d.form);
    if (d.affine()) {
        const Duality du = dual_datum(t);
        res["marks"] = vec_json(d.marks);
        res["delta"] = d.root(d.delta());
        res["a0"] = d.a0;
        res["k"] = d.k;
        res["a0k"] = d.a0k();
        res["dual"] = to_string(du.dual);
        res["dual_perm"] = du.perm;
        r.text.push_back("  marks " + to_string(d.marks) + "   delta = " + d.root(d.delta()));
        r.text.push_back("  a0 = " + std::to_string(d.a0) + "  k = " + std::to_string(d.k) +
                         "  a0k = " + std::to_string(d.a0k()));
        r.text.push_back("  dual " + pretty(du.dual));
    }
    return r;
}

Report cmd_subsystem(const TypeLabel& t, int divisor, int level) {
    auto s = subsystem_report(t, divisor, level);
    const auto& d = datum(t);
    Report r;
    r.command = "subsystem";
    r.inputs["type"] = to_string(t);
    r.inputs["t"] = divisor;
    r.inputs["level"] = level;
    auto& res = r.results;
    res["roots"] = s.roots.size();
    res["simple"] = Json::array();
    for (const auto& v : s.simple) res["simple"].push_back(d.root(v));
    res["gcm"] = mat_json(s.gcm);
    res["identified"] = s.identified.str();
    res["recognized"] = s.identified.recognized();
    res["delta_factor"] = s.delta_factor;
    r.text.push_back(pad("Delta^" + std::to_string(divisor) + " of " + pretty(t), 28) + std::to_string(s.roots.size()) +
                     " roots within level " + std::to_string(level));
    r.text.push_back(pad("simple system", 28) + roots_str(d, s.simple));
    r.text.push_back(pad("type", 28) + s.identified.str());
    if (d.affine()) r.text.push_back(pad("delta factor", 28) + std::to_string(s.delta_factor));
    r.verdict = s.identified.recognized() ? "pass" : "fail";
    if (!s.identified.recognized()) r.diagnostics.push_back("unrecognized component in " + s.identified.str());
    return r;
}

Report cmd_classify(const TypeLabel& t, int ell, int level) {
    auto c = classify_case(t, ell, level);
    const auto& d = datum(t);
    Report r;
    r.command = "classify";
    r.inputs["type"] = to_string(t);
    r.inputs["ell"] = ell;
    r.inputs["level"] = level;
    auto& res = r.results;
    res["kind"] = to_string(c.kind);
    res["M"] = c.m_type_str;
    res["g0"] = to_string(c.g0);
    res["u"] = c.u ? Json(*c.u) : Json(nullptr);
    res["twist"] = c.twist;
    res["degrees"] = Json::array();
    for (const auto& v : c.degrees) res["degrees"].push_back(d.root(v));
    res["expected"] = {{"row", c.expected.row},
                       {"kind", to_string(c.expected.kind)},
                       {"M", to_string(c.expected.m_type)},
                       {"u", c.expected.u ? Json(*c.expected.u) : Json(nullptr)},
                       {"twist", c.expected.twist},
                       {"ambiguous", c.expected.ambiguous}};
    res["matches"] = c.matches;
    res["diffs"] = c.diffs;
    r.diagnostics = c.flags;
    r.text.push_back(pad("", 10) + pad("kind", 14) + pad("M", 26) + "q'");
    r.text.push_back(pad("computed", 10) + pad(to_string(c.kind), 14) + pad(c.m_type_str, 26) +
                     (c.twist ? "twist only" : u_str(c.u)));
    r.text.push_back(pad("table", 10) + pad(to_string(c.expected.kind), 14) + pad(to_string(c.expected.m_type), 26) +
                     (c.expected.twist ? "twist only" : u_str(c.expected.u)) + "   [" + c.expected.row + "]");
    if (!c.degrees.empty()) r.text.push_back("degrees   " + roots_str(d, c.degrees));
    for (const auto& x : c.diffs) r.text.push_back("diff      " + x);
    r.verdict = c.expected.ambiguous ? "ambiguous" : c.matches ? "pass" : "fail";
    return r;
}

Report cmd_braiding(const TypeLabel& t, int ell, const std::vector<Vec>& degrees) {
    const auto& d = datum(t);
    for (const auto& v : degrees)
        if (static_cast<int>(v.size()) != d.size) throw std::invalid_argument("degree of wrong length");
    auto b = braiding_matrix(d, degrees, ell);
    auto hk = heckenberger_gcm(b);
    Report r;
    r.command = "braiding";
    r.inputs["type"] = to_string(t);
    r.inputs["ell"] = ell;
    r.inputs["degrees"] = Json::array();
    for (const auto& v : degrees) r.inputs["degrees"].push_back(d.root(v));
    auto& res = r.results;
    res["exponents"] = mat_json(b.exps);
    r.text.push_back("braiding exponents q^(b_i,b_j) mod " + std::to_string(ell));
    push_matrix(r.text, b.exps);
    if (!hk.ok) {
        res["gcm"] = nullptr;
        res["error"] = hk.error;
        r.diagnostics.push_back("Heckenberger matrix: " + hk.error);
        r.verdict = "fail";
        return r;
    }
    auto id = identify_type(hk.gcm);
    res["gcm"] = mat_json(hk.gcm);
    res["type"] = id.str();
    r.text.push_back("Heckenberger matrix");
    push_matrix(r.text, hk.gcm);
    r.text.push_back("type " + id.str());
    if (id.recognized()) {
        auto sp = standard_braiding_parameter(b, id.labels());
        res["u"] = sp ? Json(sp->u) : Json(nullptr);
        r.text.push_back(std::string("standard form: ") + (sp ? "q' = q^" + std::to_string(sp->u) : "none"));
    } else {
        r.verdict = "fail";
        r.diagnostics.push_back("unrecognized component");
    }
    return r;
}

namespace {

struct Item {
    std::string section;
    std::string subject;
    bool pass = false;
    bool ambiguous = false;
    std::string summary;
    Json detail = Json::object();
};

Item from_checks(std::string section, const CheckList& c) {
    Item it{std::move(section), c.subject, c.pass(), false, {}, Json::object()};
    it.detail["checks"] = checks_json(c);
    for (const auto& x : c.checks)
        if (!x.pass) it.summary += x.name + ": " + x.detail + "; ";
    if (it.summary.empty()) it.summary = std::to_string(c.checks.size()) + " checks";
    return it;
}

std::vector<Item> run_jobs(const std::vector<std::function<Item()>>& jobs, int workers) {
    std::vector<Item> out(jobs.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next++; i < jobs.size(); i = next++) {
            try {
                out[i] = jobs[i]();
            } catch (const std::exception& e) {
                out[i].section = "error";
                out[i].subject = "job " + std::to_string(i);
                out[i].summary = e.what();
            }
        }
    };
    workers = std::max(1, std::min<int>(workers, static_cast<int>(jobs.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return out;
}

// Multiplicities of m*delta quoted for D_4^(3), m = 1..6.
const std::vector<int> quoted_d43_multiplicities{1, 1, 2, 1, 1, 3};

}  // namespace

Report cmd_verify_all(const VerifyOptions& opt) {
    const int L = opt.level;
    std::vector<std::function<Item()>> jobs;

    for (const auto& e : finite_pi_table(8))
        jobs.push_back([e] { return from_checks("finite-subsystems", verify_pi_table(e, 0)); });

    auto affine_rows = affine_pi_table(8);
    if (opt.corrupt_fixture && !affine_rows.empty()) {
        affine_rows.front().expected_delta_factor += 1;
        affine_rows.front().expected_simple.pop_back();
    }
    for (const auto& e : affine_rows)
        jobs.push_back([e] { return from_checks("affine-subsystems", verify_pi_table(e, 6)); });

    for (const auto& t : affine_labels(6))
        jobs.push_back([t] {
            CheckList c;
            c.subject = to_string(t);
            const auto& d = datum(t);
            std::vector<Vec> simple;
            for (int i = 0; i < d.size; ++i) simple.push_back(d.simple(i));
            for (int ell : {7, 9, 11, 13}) {
                auto hk = heckenberger_gcm(braiding_matrix(d, simple, ell));
                c.add("l=" + std::to_string(ell), hk.ok && hk.gcm == d.cartan, hk.ok ? "" : hk.error);
            }
            return from_checks("generic-sanity", c);
        });

    for (const auto& t : affine_labels(6))
        for (int ell = 1; ell <= 12; ++ell)
            jobs.push_back([t, ell, L] {
                auto c = classify_case(t, ell, L);
                Item it;
                it.section = "main-table";
                it.subject = to_string(t) + " l=" + std::to_string(ell);
                it.ambiguous = c.expected.ambiguous;
                it.pass = c.matches;
                it.summary = to_string(c.kind) + " " + c.m_type_str + " " + (c.twist ? "twist" : u_str(c.u));
                if (!c.diffs.empty()) {
                    it.summary += " | diff:";
                    for (const auto& x : c.diffs) it.summary += " " + x + ";";
                }
                if (it.ambiguous) it.summary += " | " + c.expected.note;
                it.detail = {{"row", c.expected.row}, {"kind", to_string(c.kind)}, {"M", c.m_type_str},
                             {"u", c.u ? Json(*c.u) : Json(nullptr)}, {"twist", c.twist}, {"flags", c.flags},
                             {"diffs", c.diffs}};
                return it;
            });

    for (const auto& m : displayed_matrices())
        jobs.push_back([m] { return from_checks("displayed-matrices", verify_displayed(m)); });

    std::vector<std::pair<TypeLabel, int>> exotic{{{Family::G, 2, 1}, 4}, {{Family::A, 2, 2}, 3}, {{Family::A, 2, 2}, 6},
                                                  {{Family::D, 4, 3}, 4}, {{Family::A, 1, 1}, 4}};
    for (int n = 2; n <= 5; ++n)
        for (int ell : {3, 6}) exotic.push_back({{Family::A, 2 * n, 2}, ell});
    for (const auto& [t, ell] : exotic)
        jobs.push_back([t = t, ell = ell, L] { return from_checks("exotic", exotic_verify(t, ell, L).checks); });

    for (const auto& e : primitive_table(6)) {
        jobs.push_back([e, L] { return from_checks("primitive-degrees", verify_primitive_degrees(e, L)); });
        jobs.push_back([e, L] {
            CheckList c;
            c.subject = e.row + " " + to_string(e.label) + " l=" + std::to_string(e.ell);
            const auto ts = compatible_t(datum(e.label), e.ell);
            c.add("t=" + std::to_string(e.t) + " compatible", std::find(ts.begin(), ts.end(), e.t) != ts.end());
            for (int t : ts) {
                auto f = f_map_bijection_check(e.label, e.ell, t, L);
                std::string detail = f.applicable ? std::to_string(f.parent_roots) + " roots, " +
                                                        std::to_string(f.dual_roots) + " dual roots"
                                                  : f.reason;
                for (const auto& s : f.samples) detail += "; " + s;
                c.add("f-map t=" + std::to_string(t), f.applicable && f.pass, detail);
            }
            return from_checks("f-map", c);
        });
    }

    auto items = run_jobs(jobs, opt.workers);

    Report r;
    r.command = "verify-all";
    r.inputs["level"] = L;
    if (opt.corrupt_fixture) r.inputs["corrupt_fixture"] = true;
    Json sections = Json::object();
    int passed = 0, failed = 0, ambiguous = 0;
    for (const auto& it : items) {
        const char* status = it.ambiguous ? "AMBIG" : it.pass ? "PASS" : "FAIL";
        if (it.ambiguous) ++ambiguous;
        else if (it.pass) ++passed;
        else ++failed;
        Json j{{"subject", it.subject}, {"status", status}, {"summary", it.summary}};
        j.update(it.detail);
        sections[it.section].push_back(j);
        r.text.push_back(pad(it.section, 20) + pad(it.subject, 34) + pad(status, 7) + it.summary);
        if (it.ambiguous) r.diagnostics.push_back("ambiguous row " + it.subject + ": " + it.summary);
    }

    Json iso = Json::array();
    const std::vector<std::tuple<TypeLabel, TypeLabel, int>> pairs{{{Family::G, 2, 1}, {Family::A, 3, 1}, 1},
                                                                    {{Family::A, 2, 2}, {Family::A, 2, 1}, 2},
                                                                    {{Family::D, 4, 3}, {Family::D, 4, 1}, 3}};
    for (const auto& [p, t, c] : pairs) {
        auto rows = isotropic_mismatch_report(p, t, c, 6);
        std::string line = pad("isotropic", 20) + pad(to_string(p) + " vs " + to_string(t), 34) + pad("INFO", 7);
        Json jr = Json::array();
        for (const auto& row : rows) {
            line += std::to_string(row.m) + "d:" + std::to_string(row.parent) + "/" + std::to_string(row.target) + " ";
            jr.push_back({{"m", row.m}, {"parent", row.parent}, {"target", row.target}});
        }
        r.text.push_back(line);
        iso.push_back({{"parent", to_string(p)}, {"target", to_string(t)}, {"factor", c}, {"rows", jr}});
    }
    sections["isotropic"] = iso;

    std::vector<int> d43;
    for (int m = 1; m <= 6; ++m) d43.push_back(isotropic_multiplicity({Family::D, 4, 3}, m));
    if (d43 != quoted_d43_multiplicities) {
        std::string got;
        for (int x : d43) got += (got.empty() ? "" : ",") + std::to_string(x);
        r.diagnostics.push_back("D4~3 isotropic multiplicities quoted as 1,1,2,1,1,3; the multiplicity table gives " +
                                got);
    }
    r.diagnostics.push_back("A1~1 l=4: the text states q_ij q_ji = -1, the displayed matrix gives q^-4 = 1; the matrix "
                            "is used");
    r.diagnostics.push_back("primitive degrees: the text states q^(a,a) = 1 for the degrees, membership needs != 1; "
                            "implemented as != 1");

    r.results["sections"] = sections;
    r.results["summary"] = {{"pass", passed}, {"fail", failed}, {"ambiguous", ambiguous}};
    r.text.push_back("");
    r.text.push_back("pass " + std::to_string(passed) + "  fail " + std::to_string(failed) + "  ambiguous " +
                     std::to_string(ambiguous));
    r.verdict = failed ? "fail" : "pass";
    return r;
}

}  // namespace qaff
