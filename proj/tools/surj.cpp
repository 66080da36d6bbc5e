// surj: exact images of polynomial maps, Cox presentations of toric
// varieties, and surjectivity certificates, from JSON job files.
//
// Exit codes: 0 success/certified, 1 checked-and-false (not surjective,
// not equal, degenerate, inconclusive), 2 input or resource error.

#include <chrono>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "surj/jobio.hpp"

using namespace surj;

namespace {

struct GlobalFlags {
    unsigned long long seed = 0;
    long max_pairs = 200000;
    int max_retries = 8;
    int samples = 100;
    bool json_output = false;

    EngineOptions engine() const {
        EngineOptions o;
        o.seed = seed;
        o.max_retries = max_retries;
        o.samples = samples;
        o.gb.max_pairs = max_pairs;
        return o;
    }
};

std::chrono::steady_clock::time_point run_started;

void emit(const GlobalFlags& flags, Report& rep,
          const std::vector<std::string>& lines = {}) {
    rep.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            run_started)
                      .count();
    if (flags.json_output) {
        std::cout << rep.to_json().dump(2) << "\n";
        return;
    }
    std::cout << "command: " << rep.command << "\n";
    for (const auto& l : lines) std::cout << l << "\n";
    std::cout << "verdict: " << rep.verdict << "\n";
    std::cout << "seed: " << rep.seed << "\n";
    std::cout << "time_ms: " << rep.time_ms << "\n";
}

json pieces_json(const ConstructibleSet& S) {
    json arr = json::array();
    for (const auto& p : S.pieces()) arr.push_back(jobio::piece_to_string(p));
    return arr;
}

json point_json(const Point& p) {
    json arr = json::array();
    for (const auto& c : p) arr.push_back(to_string(c));
    return arr;
}

// Membership/oracle agreement on seeded random rational points.
json consistency_json(const PolynomialMap& phi, const ConstructibleSet& img,
                      const GlobalFlags& flags) {
    std::mt19937_64 rng(flags.seed ^ 0xa5a5a5a5ull);
    std::uniform_int_distribution<int> c(-6, 6);
    int agree = 0;
    for (int i = 0; i < flags.samples; ++i) {
        Point q;
        for (std::size_t k = 0; k < phi.target->size(); ++k) q.push_back(Rational(c(rng)));
        bool member = membership(img, q);
        bool oracle = fiber_membership_oracle(phi, q, flags.engine());
        if (member == oracle) ++agree;
    }
    json j;
    j["samples"] = flags.samples;
    j["agree"] = agree;
    return j;
}

int cmd_gb(const std::string& file, const std::string& order_name, const GlobalFlags& flags,
           Report& rep) {
    jobio::PolyJob job = jobio::parse_polynomials(jobio::load_file(file));
    MonomialOrder order = job.order;
    if (order_name == "lex") order = MonomialOrder::lex();
    if (order_name == "grevlex") order = MonomialOrder::grevlex();
    GroebnerOptions gopts;
    gopts.max_pairs = flags.max_pairs;
    auto G = groebner_basis_of(job.ring, job.polynomials, order, gopts);
    rep.verdict = "ok";
    rep.details["basis"] = json::array();
    std::vector<std::string> lines;
    for (const auto& g : G.elements()) {
        rep.details["basis"].push_back(to_string(g));
        lines.push_back("basis: " + to_string(g));
    }
    rep.details["size"] = G.elements().size();
    emit(flags, rep, lines);
    return 0;
}

int cmd_image(const std::string& mapfile, const std::string& equals_file,
              const GlobalFlags& flags, Report& rep) {
    PolynomialMap phi = jobio::parse_map(jobio::load_file(mapfile));
    ConstructibleSet img = image_of_map(phi, flags.engine());
    rep.details["pieces"] = pieces_json(img);
    rep.details["consistency"] = consistency_json(phi, img, flags);
    std::vector<std::string> lines;
    for (const auto& p : img.pieces()) lines.push_back("piece: " + jobio::piece_to_string(p));
    lines.push_back("oracle_agreement: " +
                    rep.details["consistency"]["agree"].dump() + "/" +
                    rep.details["consistency"]["samples"].dump());
    int code = 0;
    if (!equals_file.empty()) {
        ConstructibleSet ref = jobio::parse_set(jobio::load_file(equals_file));
        if (!same_ring(ref.ring(), phi.target))
            throw job_error("reference set uses different variables than the map target");
        ConstructibleSet ref2(phi.target, ref.pieces());
        bool eq = set_equal(img, ref2, flags.engine().gb);
        rep.verdict = eq ? "equal" : "not_equal";
        code = eq ? 0 : 1;
    } else {
        rep.verdict = "ok";
    }
    rep.exit_code = code;
    emit(flags, rep, lines);
    return code;
}

int cmd_certify(const std::string& mapfile, const std::string& setfile,
                const GlobalFlags& flags, Report& rep) {
    PolynomialMap phi = jobio::parse_map(jobio::load_file(mapfile));
    ConstructibleSet target = jobio::parse_set(jobio::load_file(setfile));
    if (!same_ring(target.ring(), phi.target))
        throw job_error("target set uses different variables than the map target");
    auto res = certify_surjection(phi, ConstructibleSet(phi.target, target.pieces()),
                                  flags.engine());
    std::vector<std::string> lines;
    for (const auto& p : res.image.pieces())
        lines.push_back("image piece: " + jobio::piece_to_string(p));
    int code = 1;
    switch (res.verdict) {
        case SurjectivityVerdict::surjective:
            rep.verdict = "surjective";
            code = 0;
            break;
        case SurjectivityVerdict::not_surjective:
            rep.verdict = "not_surjective";
            break;
        case SurjectivityVerdict::not_into_target:
            rep.verdict = "not_into_target";
            break;
    }
    if (res.witness) {
        rep.details["witness"] = point_json(*res.witness);
        lines.push_back("witness: " + to_string(*res.witness));
    }
    if (res.witness_piece) {
        rep.details["witness_piece"] = jobio::piece_to_string(*res.witness_piece);
        lines.push_back("witness piece: " + jobio::piece_to_string(*res.witness_piece));
    }
    rep.details["image_pieces"] = pieces_json(res.image);
    rep.exit_code = code;
    emit(flags, rep, lines);
    return code;
}

std::vector<std::string> cox_lines(const CoxData& C, Report& rep) {
    std::vector<std::string> lines;
    std::string cl = "Z^" + std::to_string(C.free_rank);
    for (long d : C.torsion_orders) cl += " + Z/" + std::to_string(d);
    lines.push_back("class_group: " + cl);
    rep.details["free_rank"] = C.free_rank;
    rep.details["torsion_orders"] = C.torsion_orders;
    rep.details["degrees"] = json::array();
    for (std::size_t i = 0; i < C.degrees.size(); ++i) {
        json dj;
        dj["free"] = C.degrees[i].free;
        dj["torsion"] = C.degrees[i].torsion;
        rep.details["degrees"].push_back(dj);
        std::string line = "deg x" + std::to_string(i + 1) + ": (";
        for (std::size_t k = 0; k < C.degrees[i].free.size(); ++k) {
            if (k) line += ", ";
            line += std::to_string(C.degrees[i].free[k]);
        }
        for (std::size_t k = 0; k < C.degrees[i].torsion.size(); ++k) {
            if (k || !C.degrees[i].free.empty()) line += ", ";
            line += std::to_string(C.degrees[i].torsion[k]) + " mod " +
                    std::to_string(C.torsion_orders[k]);
        }
        lines.push_back(line + ")");
    }
    json bgens = json::array();
    std::string bline = "irrelevant_ideal: (";
    for (std::size_t i = 0; i < C.irrelevant.gens.size(); ++i) {
        if (i) bline += ", ";
        bline += to_string(C.irrelevant.gens[i]);
        bgens.push_back(to_string(C.irrelevant.gens[i]));
    }
    lines.push_back(bline + ")");
    rep.details["irrelevant"] = bgens;
    rep.details["z_pieces"] = C.z_pieces;
    rep.details["codim_z"] = C.codim_z;
    std::string zline = "removed_planes:";
    if (C.z_pieces.empty()) zline += " none";
    for (const auto& piece : C.z_pieces) {
        zline += " V(";
        for (std::size_t k = 0; k < piece.size(); ++k) {
            if (k) zline += ",";
            zline += "x" + std::to_string(piece[k] + 1);
        }
        zline += ")";
    }
    lines.push_back(zline);
    lines.push_back("codim_z: " + std::to_string(C.codim_z));
    return lines;
}

int cmd_toric_cox(const std::string& fanfile, const GlobalFlags& flags, Report& rep) {
    Fan F = jobio::parse_fan(jobio::load_file(fanfile));
    FanReport fr = validate_fan(F);
    if (!fr.valid) {
        rep.verdict = "invalid_fan";
        rep.details["violations"] = fr.violations;
        rep.exit_code = 2;
        std::vector<std::string> lines;
        for (const auto& v : fr.violations) lines.push_back("violation: " + v);
        emit(flags, rep, lines);
        return 2;
    }
    if (is_degenerate(F)) {
        rep.verdict = "degenerate";
        rep.exit_code = 1;
        emit(flags, rep, {"the rays do not span the lattice"});
        return 1;
    }
    CoxData C = cox_presentation(F);
    rep.verdict = "ok";
    auto lines = cox_lines(C, rep);
    emit(flags, rep, lines);
    return 0;
}

int cmd_toric_check(const std::string& fanfile, const std::string& mapfile,
                    const GlobalFlags& flags, Report& rep) {
    Fan F = jobio::parse_fan(jobio::load_file(fanfile));
    PolynomialMap phi = jobio::parse_map(jobio::load_file(mapfile));
    CoxData C = cox_presentation(F);
    auto res = quotient_surjectivity_check(phi, C, flags.engine());
    std::vector<std::string> lines;
    for (const auto& p : res.image.pieces())
        lines.push_back("image piece: " + jobio::piece_to_string(p));
    rep.details["image_pieces"] = pieces_json(res.image);
    rep.details["saturation_pieces"] = pieces_json(res.saturation);
    int code = 1;
    switch (res.verdict) {
        case QuotientVerdict::certified:
            rep.verdict = "certified";
            code = 0;
            break;
        case QuotientVerdict::not_surjective:
            rep.verdict = "not_surjective";
            break;
        case QuotientVerdict::inconclusive:
            rep.verdict = "inconclusive";
            break;
    }
    if (res.witness) {
        rep.details["witness"] = point_json(*res.witness);
        lines.push_back("witness: " + to_string(*res.witness));
    }
    rep.exit_code = code;
    emit(flags, rep, lines);
    return code;
}

int cmd_slfactor(const std::string& matrixfile, const GlobalFlags& flags, Report& rep) {
    QMatrix A = jobio::parse_matrix(jobio::load_file(matrixfile));
    int n = static_cast<int>(A.size());
    auto F = sl_factorize(A, n);
    if (multiply_elementary(F) != A)
        throw error("internal: factorization does not multiply back");
    std::vector<std::string> lines;
    rep.details["letters"] = json::array();
    for (std::size_t k = 0; k < F.word.letters.size(); ++k) {
        json lj;
        lj["position"] = {F.word.letters[k].first, F.word.letters[k].second};
        lj["parameter"] = to_string(F.parameters[k]);
        rep.details["letters"].push_back(lj);
        lines.push_back("letter: E(" + std::to_string(F.word.letters[k].first) + "," +
                        std::to_string(F.word.letters[k].second) + "; " +
                        to_string(F.parameters[k]) + ")");
    }
    rep.details["length"] = F.word.letters.size();
    rep.verdict = "ok";
    lines.push_back("length: " + std::to_string(F.word.letters.size()));
    lines.push_back("round_trip: exact");
    emit(flags, rep, lines);
    return 0;
}

int cmd_gaword(const std::string& wordfile, bool with_image, const GlobalFlags& flags,
               Report& rep) {
    GaWord W = jobio::parse_word(jobio::load_file(wordfile));
    PolynomialMap phi = ga_word_map(W);
    std::vector<std::string> lines;
    rep.details["components"] = json::array();
    for (const auto& f : phi.components) {
        rep.details["components"].push_back(to_string(f));
        lines.push_back("component: " + to_string(f));
    }
    if (with_image) {
        ConstructibleSet img = image_of_map(phi, flags.engine());
        rep.details["pieces"] = pieces_json(img);
        for (const auto& p : img.pieces())
            lines.push_back("piece: " + jobio::piece_to_string(p));
        rep.details["consistency"] = consistency_json(phi, img, flags);
    }
    rep.verdict = "ok";
    emit(flags, rep, lines);
    return 0;
}

int cmd_surface(int k, const GlobalFlags& flags, Report& rep) {
    auto S = acovered_surface(k);
    auto opts = flags.engine();
    std::vector<std::string> lines;

    for (const auto* chart : {&S.chart_plus, &S.chart_minus}) {
        std::map<std::string, Polynomial> assign;
        for (std::size_t i = 0; i < 3; ++i)
            assign.emplace(S.ambient->vars[i], chart->components[i]);
        if (!substitute(S.surface.gens[0], assign, chart->source).is_zero())
            throw error("internal: chart does not land on the surface");
    }
    lines.push_back("chart_identity: zero polynomial for both charts");

    ConstructibleSet X(S.ambient, {Piece::closed(S.surface)});
    auto minus_divisor = [&](const Ideal& D) {
        ConstructibleSet out(S.ambient);
        for (const auto& g : D.gens) out.add_piece(Piece(S.surface, g));
        return out;
    };
    ConstructibleSet img_plus = image_of_map(S.chart_plus, opts);
    ConstructibleSet img_minus = image_of_map(S.chart_minus, opts);
    bool ok_plus = set_equal(img_plus, minus_divisor(S.divisor_plus), opts.gb);
    bool ok_minus = set_equal(img_minus, minus_divisor(S.divisor_minus), opts.gb);
    bool ok_union = set_equal(set_union(img_plus, img_minus), X, opts.gb);
    std::vector<Polynomial> both = S.divisor_plus.gens;
    both.insert(both.end(), S.divisor_minus.gens.begin(), S.divisor_minus.gens.end());
    bool ok_disjoint =
        groebner_basis_of(S.ambient, both, MonomialOrder::grevlex(), opts.gb).contains_one();

    lines.push_back(std::string("chart_plus_image: ") +
                    (ok_plus ? "surface minus its divisor" : "MISMATCH"));
    lines.push_back(std::string("chart_minus_image: ") +
                    (ok_minus ? "surface minus its divisor" : "MISMATCH"));
    lines.push_back(std::string("union_covers_surface: ") + (ok_union ? "yes" : "NO"));
    lines.push_back(std::string("divisors_disjoint: ") + (ok_disjoint ? "yes" : "NO"));
    rep.details["chart_plus_image_ok"] = ok_plus;
    rep.details["chart_minus_image_ok"] = ok_minus;
    rep.details["union_covers"] = ok_union;
    rep.details["divisors_disjoint"] = ok_disjoint;
    bool all = ok_plus && ok_minus && ok_union && ok_disjoint;
    rep.verdict = all ? "verified" : "failed";
    rep.exit_code = all ? 0 : 1;
    emit(flags, rep, lines);
    return rep.exit_code;
}

int cmd_curve(const std::string& pointsfile, const GlobalFlags& flags, Report& rep) {
    QMatrix rows = jobio::parse_matrix(jobio::load_file(pointsfile));
    std::vector<Point> pts;
    for (auto& r : rows) pts.push_back(Point(r.begin(), r.end()));
    PolynomialMap phi = curve_through_points(pts);
    std::vector<std::string> lines;
    rep.details["components"] = json::array();
    for (const auto& f : phi.components) {
        rep.details["components"].push_back(to_string(f));
        lines.push_back("component: " + to_string(f));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (phi.evaluate({Rational(static_cast<long>(i))}) != pts[i])
            throw error("internal: interpolation missed a node");
    }
    lines.push_back("hits_all_points: yes");
    rep.verdict = "ok";
    emit(flags, rep, lines);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact polynomial-map images and surjectivity certificates"};
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--seed", flags.seed, "seed for randomized slicing");
    app.add_option("--max-pairs", flags.max_pairs, "pair cap for basis computations");
    app.add_option("--max-retries", flags.max_retries, "retries for randomized choices");
    app.add_option("--samples", flags.samples, "sample count for oracle consistency");
    app.add_flag("--json", flags.json_output, "machine-readable report");

    std::string file1, file2, order_name;
    bool with_image = false;
    int surface_k = 1;

    auto* gb = app.add_subcommand("gb", "reduced basis of an ideal");
    gb->add_option("file", file1, "polynomials job file")->required();
    gb->add_option("--order", order_name, "lex or grevlex (overrides the file)");

    auto* image = app.add_subcommand("image", "constructible image of a map");
    image->add_option("file", file1, "map job file")->required();
    std::string equals_file;
    image->add_option("--equals", equals_file, "set file to compare against");

    auto* certify = app.add_subcommand("certify", "surjectivity onto a constructible set");
    certify->add_option("map", file1, "map job file")->required();
    certify->add_option("target", file2, "target set file")->required();

    auto* toric = app.add_subcommand("toric", "toric variety commands");
    auto* cox = toric->add_subcommand("cox", "quotient presentation from a fan");
    cox->add_option("fan", file1, "fan file")->required();
    auto* check = toric->add_subcommand("check", "certify a map onto the toric variety");
    check->add_option("fan", file1, "fan file")->required();
    check->add_option("map", file2, "map job file")->required();
    toric->require_subcommand(1);

    auto* slf = app.add_subcommand("slfactor", "factor a det-1 matrix into transvections");
    slf->add_option("matrix", file1, "matrix file")->required();

    auto* gaw = app.add_subcommand("gaword", "map induced by a word of unipotent flows");
    gaw->add_option("word", file1, "word file")->required();
    gaw->add_flag("--image", with_image, "also compute the image");

    auto* surf = app.add_subcommand("surface", "verify the two-chart surface cover");
    surf->add_option("--k", surface_k, "exponent in x1^2 - x2^k x3 - 1")->required();

    auto* curve = app.add_subcommand("curve", "interpolating morphism from the line");
    curve->add_option("points", file1, "matrix file, one point per row")->required();

    CLI11_PARSE(app, argc, argv);

    Report rep;
    rep.seed = flags.seed;
    run_started = std::chrono::steady_clock::now();
    try {
        int code = 2;
        if (gb->parsed()) {
            rep.command = "gb";
            code = cmd_gb(file1, order_name, flags, rep);
        } else if (image->parsed()) {
            rep.command = "image";
            code = cmd_image(file1, equals_file, flags, rep);
        } else if (certify->parsed()) {
            rep.command = "certify";
            code = cmd_certify(file1, file2, flags, rep);
        } else if (toric->parsed() && cox->parsed()) {
            rep.command = "toric cox";
            code = cmd_toric_cox(file1, flags, rep);
        } else if (toric->parsed() && check->parsed()) {
            rep.command = "toric check";
            code = cmd_toric_check(file1, file2, flags, rep);
        } else if (slf->parsed()) {
            rep.command = "slfactor";
            code = cmd_slfactor(file1, flags, rep);
        } else if (gaw->parsed()) {
            rep.command = "gaword";
            code = cmd_gaword(file1, with_image, flags, rep);
        } else if (surf->parsed()) {
            rep.command = "surface";
            code = cmd_surface(surface_k, flags, rep);
        } else if (curve->parsed()) {
            rep.command = "curve";
            code = cmd_curve(file1, flags, rep);
        }
        rep.exit_code = code;
        return code;
    } catch (const image_meets_irrelevant_locus& e) {
        rep.verdict = "not_a_morphism";
        rep.details["error"] = e.what();
        if (e.witness) rep.details["witness"] = point_json(*e.witness);
        rep.exit_code = 2;
        emit(flags, rep, {std::string("error: ") + e.what()});
        return 2;
    } catch (const std::exception& e) {
        rep.verdict = "error";
        rep.details["error"] = e.what();
        rep.exit_code = 2;
        if (flags.json_output)
            std::cout << rep.to_json().dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
