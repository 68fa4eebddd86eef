#pragma once

#include <json.hpp>

#include "../weighted.hpp"
#include "parser.hpp"

namespace nfilt::cli {

using Json = nlohmann::ordered_json;

struct RunOptions {
    int s_max = 12;
    int r_max = 64;
    std::uint64_t seed = 1;
    Field field = Field::prime;
    std::int64_t n_max = 64;
};

struct Report {
    Json body;
    int exit_code = 0;  // 0 certified, 2 bound only
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"polyhedron", "mult", "mixed", "sigma", "radius", "loja", "nondeg", "linked", "wanalyze", "gradient"};
    return c;
}

namespace detail {

inline Json q(const Rational& v) { return to_string(v); }

inline Json z(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

inline Json vec(const ExpVec& k) {
    Json a = Json::array();
    for (std::size_t i = 0; i < k.size(); ++i) a.push_back(k[i]);
    return a;
}

inline Json vec(const std::vector<std::int64_t>& v) {
    Json a = Json::array();
    for (auto x : v) a.push_back(x);
    return a;
}

inline Json seeds(const std::vector<std::uint64_t>& s) {
    Json a = Json::array();
    for (auto x : s) a.push_back(x);
    return a;
}

inline Json verdict(Verdict v) { return std::string(to_string(v)); }

class Context {
public:
    Context(const Request& req, const RunOptions& opt) : req_(req), opt_(opt) {
        sigma_.r_max = opt.r_max;
        sigma_.seed = opt.seed;
        sigma_.jet.field = opt.field;
        sigma_.jet.n_max = opt.n_max;
        loja_.s_max = opt.s_max;
        loja_.sigma = sigma_;
    }

    const SigmaOptions& sigma_options() const { return sigma_; }
    LojaOptions loja_options() const { return loja_; }
    std::size_t dim() const { return req_.dim(); }

    std::string show(const Poly& h) const { return to_string(h, req_.vars); }

    Json show(const Ideal& I) const {
        Json a = Json::array();
        for (const auto& g : I.gens()) a.push_back(show(g));
        return a;
    }

    const Value& get(const std::string& name) const {
        auto it = req_.values.find(name);
        if (it == req_.values.end()) throw Error(Errc::invalid_argument, "input does not define '" + name + "'");
        return it->second;
    }

    bool has(const std::string& name) const { return req_.has(name); }

    Ideal ideal(const std::string& name) const {
        const auto& v = get(name);
        if (auto* I = std::get_if<Ideal>(&v)) return *I;
        if (auto* p = std::get_if<Poly>(&v)) return Ideal::principal(*p);
        throw Error(Errc::invalid_argument, "'" + name + "' is not an ideal");
    }

    Poly poly(const std::string& name) const {
        if (auto* p = std::get_if<Poly>(&get(name))) return *p;
        throw Error(Errc::invalid_argument, "'" + name + "' is not a polynomial");
    }

    const Tuple& tuple() const {
        if (auto* t = std::get_if<Tuple>(&get("tuple"))) return *t;
        throw Error(Errc::invalid_argument, "'tuple' is not a tuple");
    }

    std::optional<Weights> weights() const {
        if (!has("w")) return std::nullopt;
        return Weights(std::get<std::vector<int>>(get("w")));
    }

    Ideal ref() const { return has("ref") ? ideal("ref") : Ideal(MonomialIdeal::max_power(dim(), 1)); }

    std::optional<Filtration> filtration() const {
        if (!has("filtration")) return std::nullopt;
        if (std::holds_alternative<WeightsRef>(get("filtration"))) return w_filtration(*weights());
        return Filtration::of(ideal("filtration"));
    }

    Filtration need_filtration() const {
        auto F = filtration();
        if (!F) throw Error(Errc::invalid_argument, "input does not define 'filtration'");
        return *F;
    }

    // the single function of wanalyze/gradient
    Poly function() const {
        if (has("f")) return poly("f");
        for (const auto& n : req_.order)
            if (std::holds_alternative<Poly>(get(n))) return std::get<Poly>(get(n));
        throw Error(Errc::invalid_argument, "input defines no polynomial");
    }

    // the single ideal of polyhedron/mult
    Ideal main_ideal() const {
        if (has("I")) return ideal("I");
        for (const auto& n : req_.order)
            if (std::holds_alternative<Ideal>(get(n))) return std::get<Ideal>(get(n));
        throw Error(Errc::invalid_argument, "input defines no ideal");
    }

private:
    const Request& req_;
    RunOptions opt_;
    SigmaOptions sigma_;
    LojaOptions loja_;
};

inline Json sigma_json(const SigmaResult& s) {
    Json j;
    if (s.infinite) {
        j["value"] = "infinite";
    } else {
        j["value"] = s.value;
    }
    j["certificate"] = std::string(to_string(s.certificate));
    if (s.upper) j["upper"] = *s.upper;
    if (s.stabilization_r) j["stabilization_r"] = *s.stabilization_r;
    if (!s.seeds.empty()) j["seeds"] = seeds(s.seeds);
    return j;
}

inline Json loja_json(const LojaResult& r) {
    Json j;
    j["value"] = q(r.value);
    j["status"] = std::string(to_string(r.status));
    if (r.witness_s) j["witness_s"] = *r.witness_s;
    if (r.bound) j["bound"] = q(*r.bound);
    if (r.lower) j["lower"] = q(*r.lower);
    if (!r.scan.empty()) {
        Json a = Json::array();
        for (auto [s, v] : r.scan) a.push_back(Json::array({s, v}));
        j["scan"] = a;
    }
    if (!r.seeds.empty()) j["seeds"] = seeds(r.seeds);
    return j;
}

inline Json polyhedron_json(const NewtonPolyhedron& P) {
    Json j;
    Json vs = Json::array();
    for (const auto& v : P.vertices()) vs.push_back(vec(v));
    j["vertices"] = vs;
    Json fs = Json::array();
    for (const auto& f : P.facets()) fs.push_back({{"normal", vec(f.normal)}, {"ell", f.ell}, {"compact", f.compact()}});
    j["facets"] = fs;
    j["convenient"] = P.convenient();
    return j;
}

inline Report polyhedron(const Context& c) {
    auto F = c.filtration();
    NewtonPolyhedron P = F ? F->polyhedron() : newton(c.main_ideal());
    Report r;
    r.body = polyhedron_json(P);
    if (!F && P.convenient()) F.emplace(P);
    if (F) {
        r.body["M"] = F->M();
        Json phi = Json::array();
        for (const auto& v : P.vertices()) phi.push_back({{"point", vec(v)}, {"phi", F->phi(v)}});
        r.body["phi"] = phi;
        r.body["covolume"] = q(covolume(P));
    }
    return r;
}

inline Report mult(const Context& c) {
    Ideal I = c.main_ideal();
    Report r;
    if (I.is_monomial()) {
        r.body["value"] = z(e_monomial(I.monomial()));
        r.body["certificate"] = "exact-polyhedral";
        return r;
    }
    auto s = sigma(IdealTuple::diagonal(I), c.sigma_options());
    if (s.infinite) throw Error(Errc::infinite_colength, "ideal does not have finite colength");
    r.body = sigma_json(s);
    r.exit_code = s.certified() ? 0 : 2;
    return r;
}

inline Report mixed(const Context& c) {
    auto T = c.tuple().ideals();
    Report r;
    if (T.is_monomial()) {
        r.body["value"] = z(mixed_e_monomial(T));
        r.body["certificate"] = "exact-polyhedral";
        return r;
    }
    for (const auto& I : T.items()) {
        auto s = sigma(IdealTuple::diagonal(I), c.sigma_options());
        if (s.infinite) throw Error(Errc::infinite_colength, "mixed multiplicity needs ideals of finite colength");
    }
    auto s = sigma(T, c.sigma_options());
    r.body = sigma_json(s);
    r.exit_code = s.certified() ? 0 : 2;
    return r;
}

inline Report sigma_cmd(const Context& c) {
    auto s = sigma(c.tuple().ideals(), c.sigma_options());
    Report r;
    r.body = sigma_json(s);
    r.exit_code = s.infinite || s.certified() ? 0 : 2;
    return r;
}

inline Report radius(const Context& c) {
    auto T = c.tuple().ideals();
    auto s = sigma(T, c.sigma_options());
    if (s.infinite) throw Error(Errc::infinite_colength, "sigma of the tuple is infinite");
    if (!s.certified()) throw Error(Errc::not_certified, "sigma of the tuple is not certified");
    Report r;
    r.body["value"] = rel_stabilization_radius(T, c.ref(), s.value, c.sigma_options());
    r.body["sigma"] = s.value;
    r.body["certificate"] = std::string(to_string(s.certificate));
    if (!s.seeds.empty()) r.body["seeds"] = seeds(s.seeds);
    return r;
}

inline Report loja(const Context& c) {
    const auto& T = c.tuple();
    auto opt = c.loja_options();
    auto F = c.filtration();
    if (F) opt.filtration = &*F;
    LojaResult res = T.all_polys() ? loja_map(T.polys(), c.ref(), opt) : loja_tuple(T.ideals(), c.ref(), opt);
    Report r;
    r.body = loja_json(res);
    r.exit_code = res.exact() ? 0 : 2;
    return r;
}

inline Report nondeg(const Context& c) {
    auto F = c.need_filtration();
    auto nd = is_gamma_nondegenerate(F, c.tuple().ideals(), c.sigma_options());
    Report r;
    r.body["verdict"] = verdict(nd.verdict);
    r.body["sigma_route"] = verdict(nd.sigma_route);
    if (c.tuple().all_polys()) r.body["face_route"] = verdict(nd.face_route);
    r.body["sigma"] = sigma_json(nd.sigma);
    r.body["bound"] = q(nd.bound);
    r.body["e_AM"] = z(nd.e_AM);
    r.body["levels"] = vec(nd.r);
    r.body["M"] = F.M();
    Json faces = Json::array();
    for (const auto& s : nd.faces) {
        Json fj;
        fj["normal"] = vec(s.face.normal);
        Json vs = Json::array();
        for (const auto& v : s.face.vertices) vs.push_back(vec(v));
        fj["vertices"] = vs;
        fj["verdict"] = verdict(s.verdict);
        if (s.witness) {
            Json w = Json::array();
            for (const auto& x : *s.witness) w.push_back(q(x));
            fj["witness"] = w;
        }
        faces.push_back(fj);
    }
    if (!nd.faces.empty()) r.body["faces"] = faces;
    r.exit_code = nd.verdict == Verdict::unknown ? 2 : 0;
    return r;
}

inline Report linked(const Context& c) {
    auto F = c.need_filtration();
    auto L = is_gamma_linked(F, c.ref(), c.tuple().ideals(), c.sigma_options());
    Report r;
    r.body["verdict"] = verdict(L.verdict);
    if (L.index) r.body["index"] = *L.index;
    r.body["p"] = L.p;
    r.body["q"] = L.q;
    r.body["sigma"] = L.sigma;
    r.body["tuple_nondegenerate"] = L.tuple_nondegenerate;
    r.body["required"] = q(L.required);
    r.body["prefilter_rejected"] = L.prefilter_rejected;
    if (L.sigma_substituted) r.body["sigma_substituted"] = *L.sigma_substituted;
    if (!L.seeds.empty()) r.body["seeds"] = seeds(L.seeds);
    r.exit_code = L.verdict == Verdict::unknown ? 2 : 0;
    return r;
}

inline Json gradient_json(const GradientLoja& g) {
    Json j;
    j["loja"] = q(g.loja.value);
    j["status"] = std::string(to_string(g.loja.status));
    j["sufficient_hypothesis"] = g.sufficient_hypothesis;
    if (g.i0) j["i0"] = *g.i0;
    j["w_linked"] = verdict(g.w_linked);
    if (g.c0_determinacy) j["c0_determinacy"] = z(*g.c0_determinacy);
    if (!g.loja.seeds.empty()) j["seeds"] = seeds(g.loja.seeds);
    return j;
}

inline Report gradient_cmd(const Context& c) {
    Poly f = c.function();
    Report r;
    if (auto w = c.weights()) {
        auto g = gradient_loja(f, *w, c.sigma_options());
        r.body = gradient_json(g);
        if (g.semi.milnor) r.body["milnor"] = *g.semi.milnor;
        r.exit_code = g.loja.exact() ? 0 : 2;
        return r;
    }
    auto iso = isolated_singularity(f, c.sigma_options().jet);
    if (iso.verdict == Verdict::no) throw Error(Errc::infinite_colength, "f does not have an isolated singularity");
    if (iso.verdict == Verdict::unknown) throw Error(Errc::oracle_cap, "isolated singularity not decided within the jet cap");
    auto L = loja_map(gradient(f), MonomialIdeal::max_power(c.dim(), 1), c.loja_options());
    r.body["loja"] = q(L.value);
    r.body["status"] = std::string(to_string(L.status));
    if (L.witness_s) r.body["witness_s"] = *L.witness_s;
    r.body["milnor"] = *iso.milnor;
    if (!L.seeds.empty()) r.body["seeds"] = seeds(L.seeds);
    r.exit_code = L.exact() ? 0 : 2;
    return r;
}

inline Report wanalyze(const Context& c) {
    Poly f = c.function();
    auto w = c.weights();
    if (!w) throw Error(Errc::invalid_argument, "wanalyze needs weights w=(...)");
    Report r;
    auto semi = is_semi_weighted_homogeneous(f, *w, c.sigma_options().jet);
    Poly pf = p_w(f, *w);
    r.body["weights"] = w->values();
    r.body["d"] = semi.d;
    r.body["principal_part"] = c.show(pf);
    r.body["weighted_homogeneous"] = pf == f;
    r.body["semi_weighted_homogeneous"] = verdict(semi.verdict);
    if (semi.verdict != Verdict::yes) {
        r.exit_code = semi.verdict == Verdict::no ? 0 : 2;
        return r;
    }
    r.body["milnor"] = *semi.milnor;
    auto g = gradient_loja(f, *w, c.sigma_options());
    r.body["gradient"] = gradient_json(g);
    if (pf != f) {
        // both sides of the open equality question, neither asserted
        auto gp = gradient_loja(pf, *w, c.sigma_options());
        r.body["principal_gradient"] = gradient_json(gp);
    }
    r.body["pIg"] = verdict(pIg_check(gradient(f), *w));
    if (w->dim() == 3) {
        auto k = kop_formula(w->values(), semi.d);
        r.body["kop"] = {{"value", q(k.value)},
                         {"first", q(k.first)},
                         {"second", q(k.second)},
                         {"branch", k.first_active ? "first" : "second"},
                         {"remark_condition", k.remark_condition}};
    }
    r.exit_code = g.loja.exact() ? 0 : 2;
    return r;
}

}// namespace detail

inline Report run(const std::string& command, const Request& req, const RunOptions& opt = {}) {
    if (req.vars.empty()) throw Error(Errc::invalid_argument, "input declares no variables");
    detail::Context c(req, opt);
    Report r;
    if (command == "polyhedron") r = detail::polyhedron(c);
    else if (command == "mult") r = detail::mult(c);
    else if (command == "mixed") r = detail::mixed(c);
    else if (command == "sigma") r = detail::sigma_cmd(c);
    else if (command == "radius") r = detail::radius(c);
    else if (command == "loja") r = detail::loja(c);
    else if (command == "nondeg") r = detail::nondeg(c);
    else if (command == "linked") r = detail::linked(c);
    else if (command == "wanalyze") r = detail::wanalyze(c);
    else if (command == "gradient") r = detail::gradient_cmd(c);
    else throw Error(Errc::invalid_argument, "unknown command '" + command + "'");
    Json out;
    out["command"] = command;
    for (auto& [k, v] : r.body.items()) out[k] = v;
    r.body = std::move(out);
    return r;
}

inline Json error_json(const Error& e) {
    return Json{{"error", std::string(code_name(e.code()))}, {"message", e.what()}};
}

}// namespace nfilt::cli
