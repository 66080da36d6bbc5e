#ifndef SURJ_JOBIO_HPP
#define SURJ_JOBIO_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "surj/builders.hpp"
#include "surj/cox.hpp"

namespace surj {

using json = nlohmann::json;

struct job_error : error {
    using error::error;
};

namespace jobio {

inline json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw job_error("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw job_error("malformed JSON in " + path + ": " + e.what());
    }
}

inline void expect_kind(const json& j, const std::string& kind) {
    if (j.contains("kind") && j.at("kind") != kind)
        throw job_error("job file has kind '" + j.at("kind").get<std::string>() +
                        "', expected '" + kind + "'");
}

inline std::vector<std::string> string_list(const json& j, const std::string& key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw job_error("missing or non-array field '" + key + "'");
    std::vector<std::string> out;
    for (const auto& x : j.at(key)) {
        if (!x.is_string()) throw job_error("field '" + key + "' must hold strings");
        out.push_back(x.get<std::string>());
    }
    return out;
}

// ---- set files: {vars, pieces: [{equations, inequation}]} ----

inline ConstructibleSet parse_set(const json& j) {
    expect_kind(j, "set");
    RingPtr ring = make_ring(string_list(j, "vars"));
    ConstructibleSet S(ring);
    if (!j.contains("pieces") || !j.at("pieces").is_array())
        throw job_error("set file needs a 'pieces' array");
    for (const auto& pj : j.at("pieces")) {
        std::vector<Polynomial> eqs;
        for (const auto& e : string_list(pj, "equations"))
            eqs.push_back(parse_polynomial(e, ring));
        std::string ineq = pj.contains("inequation")
                               ? pj.at("inequation").get<std::string>()
                               : std::string("1");
        S.add_piece(Piece(Ideal(ring, std::move(eqs)), parse_polynomial(ineq, ring)));
    }
    return S;
}

inline json set_to_json(const ConstructibleSet& S) {
    json j;
    j["kind"] = "set";
    j["vars"] = S.ring()->vars;
    j["pieces"] = json::array();
    for (const auto& p : S.pieces()) {
        json pj;
        pj["equations"] = json::array();
        for (const auto& g : p.equations.gens) pj["equations"].push_back(to_string(g));
        pj["inequation"] = to_string(p.inequation);
        j["pieces"].push_back(std::move(pj));
    }
    return j;
}

// ---- map files: {source_vars, components, domain?, target_vars?} ----

inline PolynomialMap parse_map(const json& j) {
    expect_kind(j, "map");
    RingPtr src = make_ring(string_list(j, "source_vars"));
    std::vector<std::string> comp_texts = string_list(j, "components");
    std::vector<std::string> tv;
    if (j.contains("target_vars")) tv = string_list(j, "target_vars");
    if (tv.empty())
        for (std::size_t i = 0; i < comp_texts.size(); ++i)
            tv.push_back("y" + std::to_string(i + 1));
    RingPtr tgt = make_ring(tv);
    std::vector<Polynomial> comps;
    for (const auto& t : comp_texts) comps.push_back(parse_polynomial(t, src));
    if (j.contains("domain")) {
        ConstructibleSet dom = parse_set(j.at("domain"));
        if (!same_ring(dom.ring(), src))
            throw job_error("map domain must use the source variables");
        return PolynomialMap(src, tgt, std::move(comps),
                             ConstructibleSet(src, dom.pieces()));
    }
    return PolynomialMap(src, tgt, std::move(comps));
}

inline json map_to_json(const PolynomialMap& phi) {
    json j;
    j["kind"] = "map";
    j["source_vars"] = phi.source->vars;
    j["target_vars"] = phi.target->vars;
    j["components"] = json::array();
    for (const auto& f : phi.components) j["components"].push_back(to_string(f));
    json dom = set_to_json(phi.domain);
    dom.erase("kind");
    j["domain"] = std::move(dom);
    return j;
}

// ---- fan files: {rank, rays, max_cones} ----

inline Fan parse_fan(const json& j) {
    expect_kind(j, "fan");
    Fan F;
    if (!j.contains("rank") || !j.at("rank").is_number_integer())
        throw job_error("fan file needs an integer 'rank'");
    F.rank = j.at("rank").get<int>();
    if (!j.contains("rays") || !j.at("rays").is_array())
        throw job_error("fan file needs a 'rays' array");
    for (const auto& r : j.at("rays")) F.rays.push_back(r.get<std::vector<long>>());
    if (!j.contains("max_cones") || !j.at("max_cones").is_array())
        throw job_error("fan file needs a 'max_cones' array");
    for (const auto& c : j.at("max_cones")) F.max_cones.push_back(c.get<std::vector<int>>());
    return F;
}

inline json fan_to_json(const Fan& F) {
    json j;
    j["kind"] = "fan";
    j["rank"] = F.rank;
    j["rays"] = F.rays;
    j["max_cones"] = F.max_cones;
    return j;
}

// ---- polynomial job files: {vars, polynomials, order?} ----

struct PolyJob {
    RingPtr ring;
    std::vector<Polynomial> polynomials;
    MonomialOrder order = MonomialOrder::grevlex();
};

inline PolyJob parse_polynomials(const json& j) {
    expect_kind(j, "polynomials");
    PolyJob job;
    job.ring = make_ring(string_list(j, "vars"));
    for (const auto& t : string_list(j, "polynomials"))
        job.polynomials.push_back(parse_polynomial(t, job.ring));
    if (j.contains("order")) {
        std::string o = j.at("order").get<std::string>();
        if (o == "lex")
            job.order = MonomialOrder::lex();
        else if (o == "grevlex")
            job.order = MonomialOrder::grevlex();
        else
            throw job_error("unknown order '" + o + "' (use lex or grevlex)");
    }
    return job;
}

inline json polynomials_to_json(const PolyJob& job) {
    json j;
    j["kind"] = "polynomials";
    j["vars"] = job.ring->vars;
    j["polynomials"] = json::array();
    for (const auto& p : job.polynomials) j["polynomials"].push_back(to_string(p));
    j["order"] = job.order.kind == MonomialOrder::Kind::lex ? "lex" : "grevlex";
    return j;
}

// ---- word files: {vars, derivations: [[images per var]], base_point} ----

inline GaWord parse_word(const json& j) {
    expect_kind(j, "word");
    RingPtr ring = make_ring(string_list(j, "vars"));
    GaWord W;
    if (!j.contains("derivations") || !j.at("derivations").is_array())
        throw job_error("word file needs a 'derivations' array");
    for (const auto& dj : j.at("derivations")) {
        std::vector<Polynomial> images;
        for (const auto& t : dj) images.push_back(parse_polynomial(t.get<std::string>(), ring));
        W.derivations.push_back(Lnd(ring, std::move(images)));
    }
    for (const auto& c : string_list(j, "base_point"))
        W.base_point.push_back(parse_rational(c));
    return W;
}

inline json word_to_json(const GaWord& W) {
    json j;
    j["kind"] = "word";
    j["vars"] = W.derivations.at(0).ring()->vars;
    j["derivations"] = json::array();
    for (const auto& D : W.derivations) {
        json dj = json::array();
        for (const auto& im : D.images()) dj.push_back(to_string(im));
        j["derivations"].push_back(std::move(dj));
    }
    j["base_point"] = json::array();
    for (const auto& c : W.base_point) j["base_point"].push_back(to_string(c));
    return j;
}

// ---- matrix files: {entries: [[rational strings]]} ----
// slfactor reads them as a square matrix, curve as one point per row.

inline QMatrix parse_matrix(const json& j) {
    expect_kind(j, "matrix");
    if (!j.contains("entries") || !j.at("entries").is_array())
        throw job_error("matrix file needs an 'entries' array");
    QMatrix M;
    for (const auto& row : j.at("entries")) {
        std::vector<Rational> r;
        for (const auto& x : row) {
            if (x.is_string())
                r.push_back(parse_rational(x.get<std::string>()));
            else if (x.is_number_integer())
                r.push_back(Rational(x.get<long>()));
            else
                throw job_error("matrix entries must be integers or rational strings");
        }
        M.push_back(std::move(r));
    }
    return M;
}

inline json matrix_to_json(const QMatrix& M) {
    json j;
    j["kind"] = "matrix";
    j["entries"] = json::array();
    for (const auto& row : M) {
        json rj = json::array();
        for (const auto& x : row) rj.push_back(to_string(x));
        j["entries"].push_back(std::move(rj));
    }
    return j;
}

// ---- rendering ----

inline std::string piece_to_string(const Piece& p) {
    std::string s;
    if (p.equations.gens.empty()) {
        s = "A^" + std::to_string(p.equations.ring->size());
    } else {
        s = "V(";
        for (std::size_t i = 0; i < p.equations.gens.size(); ++i) {
            if (i) s += ", ";
            s += to_string(p.equations.gens[i]);
        }
        s += ")";
    }
    if (!(p.inequation.is_constant() && !p.inequation.is_zero()))
        s += " \\ V(" + to_string(p.inequation) + ")";
    return s;
}

}  // namespace jobio

// Structured run report; deterministic for fixed input and seed.
struct Report {
    std::string command;
    std::string verdict;
    json details = json::object();
    unsigned long long seed = 0;
    double time_ms = 0.0;
    int exit_code = 0;

    json to_json() const {
        json j;
        j["command"] = command;
        j["verdict"] = verdict;
        j["details"] = details;
        j["seed"] = seed;
        j["time_ms"] = time_ms;
        j["exit_code"] = exit_code;
        return j;
    }
};

}  // namespace surj

#endif
