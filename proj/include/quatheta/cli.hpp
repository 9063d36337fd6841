#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "io.hpp"
#include "svg.hpp"
#include "verify.hpp"

namespace quatheta::cli {

enum Exit { ok = 0, domain_error = 1, verification_failure = 2, internal_error = 70, usage = 64 };

namespace detail {

using io::json;

inline std::vector<std::int64_t> ints(const std::string& s) {
    Weight w = parse_weight(s);
    std::vector<std::int64_t> out;
    for (auto x : w.c) {
        if (!x.is_integer()) throw DomainError("expected integers: " + s);
        out.push_back(x.as_int());
    }
    return out;
}

inline std::vector<std::int64_t> ints_n(const std::string& s, std::size_t n, const std::string& what) {
    auto v = ints(s);
    if (v.size() != n) throw DomainError(what + " needs " + std::to_string(n) + " entries");
    return v;
}

inline Triple triple(const std::string& s, const std::string& what) {
    auto v = ints_n(s, 3, what);
    return {v[0], v[1], v[2]};
}

// "0;1" -> one weight per factor
inline std::vector<Weight> factors(const std::string& s) {
    std::vector<Weight> out;
    std::size_t start = 0;
    while (true) {
        auto semi = s.find(';', start);
        out.push_back(parse_weight(s.substr(start, semi == std::string::npos ? std::string::npos : semi - start)));
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return out;
}

inline std::optional<char> sign_of(const std::string& s) {
    if (s.empty()) return std::nullopt;
    if (s.size() != 1) throw DomainError("sign must be + or -");
    return s[0];
}

inline std::string module_text(const QuatModule& m) {
    std::string w;
    for (auto& x : m.wm) w += to_string(x);
    return std::string(m.quotient == Quotient::sigma ? "sigma" : "A") + "(" + m.G + ", " + w + "[" + std::to_string(m.s) + "])";
}

inline std::string theta_text(const ThetaLift& t) {
    if (t.zero) return "0\n";
    std::string out;
    for (auto& [m, k] : t.terms) {
        out += t.upper_bound ? "contained in " : "";
        out += (k == 1 ? "" : std::to_string(k) + " * ") + module_text(m);
        out += "\n";
    }
    return out;
}

inline std::string spin2_text(const Spin2Module& m) {
    std::string s = "{";
    bool first = true;
    for (auto& [w, k] : m) {
        s += (first ? "" : ", ") + to_string(w) + ":" + std::to_string(k);
        first = false;
    }
    return s + "}";
}

inline std::string su2_text(const SU2Decomp& d) {
    std::string s;
    for (auto& [hw, k] : d) s += (s.empty() ? "" : " + ") + (k == 1 ? "" : std::to_string(k) + "*") + "(" + std::to_string(hw) + ")";
    return s;
}

inline std::string iso_text(const IsoDecomp& d) {
    std::string s;
    for (auto& [hw, k] : d.terms) s += (s.empty() ? "" : " + ") + (k == 1 ? "" : std::to_string(k) + "*") + to_string(hw);
    return s.empty() ? "0" : s;
}

inline std::string detail_triple(const Triple& t) { return verify::detail::tstr(t); }

struct Flags {
    std::string format = "json";
    // branch
    std::string rule, lambda, mn, ab;
    int from = 0, to = 0;
    std::int64_t k = 0;
    // theta
    std::string ambient, params, u2, torus, sign, partner;
    // ktypes / infchar
    std::string group, wm, check;
    std::int64_t s = 2, levels = 3;
    // aq
    std::string aq_case, contains, tau, regular;
    std::int64_t wall = 0, segments = 0;
    // verify
    std::string suite;
    std::int64_t max_entry = 3, level = 16;
    // plot
    std::string figure, output;
    std::int64_t a = 1;
};

inline void emit(std::ostream& out, const std::string& format, const json& j, const std::string& text) {
    if (format == "text") out << text;
    else out << j.dump() << "\n";
}

inline int do_branch(const Flags& f, std::ostream& out) {
    std::ostringstream txt;
    json j;
    if (f.rule == "sp" || f.rule == "spin-odd" || f.rule == "spin-even") {
        Weight l = parse_weight(f.lambda);
        if (f.rule == "sp") {
            auto r = branch_sp(l);
            j = io::branch_json(f.rule, l, r, io::su2_json);
            for (auto& [mu, d] : r) txt << to_string(mu) << " " << su2_text(d) << "\n";
        } else {
            auto r = f.rule == "spin-odd" ? branch_spin_odd(l) : branch_spin_even(l);
            j = io::branch_json(f.rule, l, r, [](const Spin2Module& m) { return io::to_json(m); });
            for (auto& [mu, d] : r) txt << to_string(mu) << " " << spin2_text(d) << "\n";
        }
    } else if (f.rule == "gz") {
        Weight l = parse_weight(f.lambda);
        auto r = gz_chain(f.from, l, f.to);
        j = io::branch_json(f.rule, l, r, [](std::int64_t k) { return json{{"mult", k}}; });
        for (auto& [mu, k] : r) txt << to_string(mu) << " " << k << "\n";
    } else if (f.rule == "u2-torus") {
        auto v = ints_n(f.mn, 2, "--mn");
        json r = json::array();
        for (auto& t : u2_to_torus(v[0], v[1])) {
            r.push_back({{"mu", io::triple_json(t)}, {"module", {{"mult", 1}}}});
            txt << detail_triple(t) << "\n";
        }
        j = {{"rule", f.rule}, {"lambda", json::array({v[0], v[1]})}, {"result", r}};
    } else if (f.rule == "e7-d6") {
        json r = json::array();
        for (auto& [m, w] : restrict_e7_to_su2_spin12(f.k)) {
            r.push_back({{"mu", io::to_json(w)}, {"module", {{"su2", m}}}});
            txt << "(" << m << ") x " << to_string(w) << "\n";
        }
        j = {{"rule", f.rule}, {"lambda", json::array({f.k})}, {"result", r}};
    } else if (f.rule == "f4-spin9") {
        auto v = ints_n(f.ab, 2, "--ab");
        auto& B4 = root_system("B4");
        std::map<Weight, json> r;
        for (auto& [w, k] : f4_to_spin9_table(v[0], v[1])) {
            r[w] = {{"mult", k}, {"dim", weyl_dim(B4, w)}};
            txt << to_string(w) << " " << k << " " << weyl_dim(B4, w) << "\n";
        }
        j = io::branch_json(f.rule, f4_omega(v[0], v[1]), r, [](const json& x) { return x; });
    } else {
        throw DomainError("unknown rule: " + f.rule);
    }
    emit(out, f.format, j, txt.str());
    return Exit::ok;
}

inline int do_theta(const Flags& f, std::ostream& out) {
    ThetaLift t;
    auto sg = sign_of(f.sign);
    std::string a = f.ambient;
    if (a == "E6") {
        if (!f.u2.empty()) {
            auto v = ints_n(f.u2, 2, "--u2");
            t = theta_e6_u2(v[0], v[1], sg);
        } else {
            auto v = ints_n(!f.torus.empty() ? f.torus : f.params, 3, "E6 torus parameters");
            t = theta_e6_torus(v[0], v[1], v[2], sg);
        }
    } else if (a == "E7") {
        auto v = ints_n(f.params, 3, "--params");
        t = theta_e7(v[0], v[1], v[2]);
    } else if (a == "E8") {
        Weight w = parse_weight(f.params);
        if (f.partner == "spin8") t = theta_e8_spin8(w);
        else if (f.partner == "spin9" || f.partner.empty()) t = theta_e8_spin9(w);
        else throw DomainError("--partner must be spin8 or spin9");
    } else if (a == "F4") {
        auto v = ints_n(f.params, 1, "--params");
        t = theta_f4(v[0], sg);
    } else {
        throw DomainError("unknown ambient: " + a);
    }
    emit(out, f.format, io::to_json(t), theta_text(t));
    return Exit::ok;
}

inline QuatModule module_flags(const Flags& f) {
    QuatModule m{f.group, factors(f.wm), f.s, Quotient::A};
    validate(m);
    return m;
}

inline int do_ktypes(const Flags& f, std::ostream& out) {
    auto L = ktypes(module_flags(f), f.levels);
    std::ostringstream txt;
    for (auto& l : L.levels) txt << "k=" << l.k << " (" << l.su0 << ") x [" << iso_text(l.tau) << "]\n";
    emit(out, f.format, io::to_json(L), txt.str());
    return Exit::ok;
}

inline int do_infchar(const Flags& f, std::ostream& out) {
    if (!f.check.empty()) {
        Weight p = parse_weight(f.params);
        auto r = infchar_crosscheck(parse_theta_table(f.check), p.c, sign_of(f.sign));
        json j = {{"applicable", r.applicable}, {"ok", r.ok}};
        std::string txt = r.applicable ? "" : "not applicable (zero lift)\n";
        if (r.applicable) {
            j["expected"] = io::to_json(r.expected);
            j["computed"] = io::to_json(r.computed);
            txt = std::string(r.ok ? "pass " : "fail ") + to_string(r.expected.value) + " " + to_string(r.computed.value) + "\n";
        }
        emit(out, f.format, j, txt);
        return r.applicable && !r.ok ? Exit::verification_failure : Exit::ok;
    }
    auto c = inf_char(module_flags(f));
    emit(out, f.format, io::to_json(c), c.system + " " + to_string(c.value) + "\n");
    return Exit::ok;
}

inline int do_aq(const Flags& f, std::ostream& out) {
    if (f.segments > 0) {
        auto s = ftau_restriction_segments(f.segments);
        json j = json::array();
        std::string txt;
        for (auto& seg : s) {
            j.push_back(io::xy_list(seg));
            for (auto& p : seg) txt += verify::detail::xystr(p) + " ";
            txt += "\n";
        }
        emit(out, f.format, j, txt);
        return Exit::ok;
    }
    if (!f.tau.empty()) {
        auto v = ints_n(f.tau, 2, "--tau");
        ThetaUnitary r;
        if (!f.regular.empty()) {
            auto t = triple(f.regular, "--regular");
            r = theta_unitary({v[0], v[1]}, RegularRegime{t[0], t[1], t[2]});
        } else {
            r = theta_unitary({v[0], v[1]}, WallRegime{f.wall});
        }
        std::string txt = r.zero ? "0\n" : "if non-zero: minimal type " + verify::detail::xystr(*r.minimal_type) + " (" + r.g2_case + ")\n";
        emit(out, f.format, io::to_json(r), txt);
        return Exit::ok;
    }
    auto d = aq_data({parse_aq_group(f.group), f.aq_case, triple(f.lambda, "--lambda")});
    json j = io::to_json(d);
    std::string txt = "inf char " + detail_triple(d.inf_char) + ", mu " + detail_triple(d.minimal_type_abc) + ", (x,y) " +
                      verify::detail::xystr(d.minimal_type_xy) + "\n";
    if (!f.contains.empty()) {
        auto q = ints_n(f.contains, 2, "--contains");
        bool in = cone_contains_xy(d, {q[0], q[1]});
        j["contains"] = in;
        txt += std::string(in ? "contains " : "does not contain ") + verify::detail::xystr({q[0], q[1]}) + "\n";
    }
    emit(out, f.format, j, txt);
    return Exit::ok;
}

inline int do_verify(const Flags& f, std::ostream& out) {
    auto r = verify::run_suite(f.suite, {f.max_entry, f.level});
    out << r.text();
    return r.ok() ? Exit::ok : Exit::verification_failure;
}

inline int do_plot(const Flags& f, std::ostream& out) {
    std::string svg;
    std::string name = f.figure;
    if (name == "histogram") {
        svg = svg::emit_histogram(ktypes(module_flags(f), f.levels));
    } else {
        Triple abc = name == "pu21-regular" ? Triple{1, 0, -1} : Triple{2, 1, -3};
        if (!f.lambda.empty()) abc = triple(f.lambda, "--lambda");
        svg = svg::emit(svg::cone_figure(name, abc, f.a));
    }
    if (f.output.empty()) {
        out << svg;
    } else {
        std::ofstream o(f.output, std::ios::binary);
        if (!o) throw DomainError("cannot write " + f.output);
        o << svg;
    }
    return Exit::ok;
}

}  // namespace detail

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Flags f;
    CLI::App app{"quatheta: K-types, branching rules, theta tables and A_q data"};
    app.require_subcommand(1, 1);
    auto fmt = [&](CLI::App* s) { s->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"})); };

    auto* br = app.add_subcommand("branch", "closed-form branching rules");
    br->add_option("--rule", f.rule, "sp, spin-odd, spin-even, gz, u2-torus, e7-d6, f4-spin9")->required();
    br->add_option("--lambda", f.lambda, "highest weight, comma separated");
    br->add_option("--from", f.from, "gz: source m of Spin(m)");
    br->add_option("--to", f.to, "gz: target m");
    br->add_option("--mn", f.mn, "u2-torus: m,n");
    br->add_option("--k", f.k, "e7-d6: level k");
    br->add_option("--ab", f.ab, "f4-spin9: a,b");
    fmt(br);

    auto* th = app.add_subcommand("theta", "theta lifts from the tables");
    th->add_option("--ambient", f.ambient, "E6, E7, E8 or F4")->required()->check(CLI::IsMember({"E6", "E7", "E8", "F4"}));
    th->add_option("--params", f.params, "table parameters");
    th->add_option("--u2", f.u2, "E6: U(2) highest weight a,b");
    th->add_option("--torus", f.torus, "E6: torus character a,b,c");
    th->add_option("--sign", f.sign, "+ or - for the split cases");
    th->add_option("--partner", f.partner, "E8: spin8 or spin9");
    fmt(th);

    auto* kt = app.add_subcommand("ktypes", "K-type ledger of A(G, W[s])");
    kt->add_option("--group", f.group, "Spin(4,3), Spin(4,4), E6_4, E7_4, E8_4, F4_4, G2_2")->required();
    kt->add_option("--wm", f.wm, "M weight, factors separated by ';'")->required();
    kt->add_option("--s", f.s, "s >= 2")->required();
    kt->add_option("--levels", f.levels, "truncation level");
    fmt(kt);

    auto* ic = app.add_subcommand("infchar", "infinitesimal characters");
    ic->add_option("--group", f.group);
    ic->add_option("--wm", f.wm);
    ic->add_option("--s", f.s);
    ic->add_option("--check", f.check, "e6-u2, e7, e8-spin8, e8-spin9, f4");
    ic->add_option("--params", f.params);
    ic->add_option("--sign", f.sign);
    fmt(ic);

    auto* aq = app.add_subcommand("aq", "A_q(lambda) data and theta of unitary modules");
    aq->add_option("--group", f.group, "g2 or pu21");
    aq->add_option("--case", f.aq_case, "I, II, III, Ia.1, ..., IIb");
    aq->add_option("--lambda", f.lambda, "a,b,c");
    aq->add_option("--contains", f.contains, "query x,y");
    aq->add_option("--tau", f.tau, "PU(2,1) minimal type m,n");
    aq->add_option("--wall", f.wall, "wall parameter a");
    aq->add_option("--regular", f.regular, "regular a,b,c");
    aq->add_option("--segments", f.segments, "restriction segments for a");
    fmt(aq);

    auto* ve = app.add_subcommand("verify", "run an invariant suite");
    ve->add_option("--suite", f.suite, "all or a suite name")->required();
    ve->add_option("--max-entry", f.max_entry, "largest weight entry for branching");
    ve->add_option("--level", f.level, "see-saw truncation");

    auto* pl = app.add_subcommand("plot", "SVG figures");
    pl->add_option("--figure", f.figure, "g2-regular, g2-wall-1, g2-wall-2, pu21-regular, pu21-wall-1, pu21-wall-2, empty, histogram")
        ->required();
    pl->add_option("--lambda", f.lambda, "regular (a,b,c)");
    pl->add_option("--a", f.a, "wall parameter");
    pl->add_option("--group", f.group);
    pl->add_option("--wm", f.wm);
    pl->add_option("--s", f.s);
    pl->add_option("--levels", f.levels);
    pl->add_option("--output", f.output, "file, default stdout");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return Exit::ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return Exit::usage;
    }
    try {
        if (br->parsed()) return detail::do_branch(f, out);
        if (th->parsed()) return detail::do_theta(f, out);
        if (kt->parsed()) return detail::do_ktypes(f, out);
        if (ic->parsed()) return detail::do_infchar(f, out);
        if (aq->parsed()) return detail::do_aq(f, out);
        if (ve->parsed()) return detail::do_verify(f, out);
        if (pl->parsed()) return detail::do_plot(f, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return Exit::domain_error;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return Exit::domain_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return Exit::internal_error;
    }
    return Exit::usage;
}

}  // namespace quatheta::cli
