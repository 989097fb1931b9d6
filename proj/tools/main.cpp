#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "io.hpp"
#include "ospl/frobenius.hpp"
#include "ospl/linkage.hpp"
#include "ospl/rootdata.hpp"
#include "ospl/sl2.hpp"
#include "ospl/spo21.hpp"
#include "ospl/verify.hpp"

namespace {

using namespace ospl;
using io::json;
using io::Table;

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;

struct Globals {
    i64 p = 3;
    int r = 1;
    int n = 1;
    int m = 1;
    std::string type = "odd";
    std::string format = "json";
    bool seed_irrelevant = false;

    Prime prime() const { return Prime(p); }
    GroupShape shape() const {
        GroupShape s{n, m, parse_parity_type(type)};
        s.validate();
        return s;
    }
    int frobenius_r() const {
        if (r < 1) throw std::invalid_argument("--r must be positive");
        return r;
    }
};

struct Output {
    json j;
    Table table;
    int code = 0;
};

std::pair<i64, i64> parse_window(const std::string& text) {
    const Box b = Box::parse(text);
    if (b.lo.size() != 1) throw std::invalid_argument("--window takes a single range a:b");
    if (b.lo[0] > b.hi[0]) throw std::invalid_argument("empty window");
    return {b.lo[0], b.hi[0]};
}

WeightVec parse_lambda(const std::string& text, const GroupShape& shape) {
    std::vector<i64> c;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            c.push_back(std::stoll(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("bad --lambda entry '" + part + "'");
        }
    }
    if (c.size() != shape.rank()) throw std::invalid_argument("--lambda needs n+m integers");
    return WeightVec::integral(c);
}

Flag parse_flag(const std::string& text, const GroupShape& shape) {
    Flag f = text.empty() ? Flag::standard(shape) : Flag::parse(text);
    f.validate(shape);
    return f;
}

Box parse_box(const std::string& text, const GroupShape& shape) {
    Box b = Box::parse(text);
    if (b.lo.size() != shape.rank()) throw std::invalid_argument("--box needs n+m ranges");
    return b;
}

std::string str(const WeightVec& w) {
    std::string s;
    for (std::size_t i = 0; i < w.rank(); ++i) s += (i ? "," : "") + w[i].str();
    return s;
}

Output factors_output(const FactorMultiset& f) { return {io::to_json(f), io::factor_table(f)}; }

Table monomial_table(const std::vector<BasisMonomial>& ms, i64 degree, bool frobenius) {
    Table t{{"side", "i", "eps", "weight", "parity"}, {}};
    for (const auto& m : ms)
        t.rows.push_back({to_string(m.side), std::to_string(m.i), std::to_string(m.eps),
                          std::to_string(frobenius ? weight_r(m, degree) : weight(m, degree)),
                          to_string(parity(m))});
    return t;
}

json monomials_json(const std::vector<BasisMonomial>& ms, i64 degree, bool frobenius) {
    json arr = json::array();
    for (const auto& m : ms) arr.push_back(io::to_json(m, degree, frobenius));
    return arr;
}

Output root_output(const std::vector<Root>& rs) {
    Output o;
    o.j = {{"roots", json::array()}};
    o.table.header = {"root", "parity", "isotropic"};
    for (const Root& r : rs) {
        o.j["roots"].push_back(io::to_json(r));
        o.table.rows.push_back({str(r.vec), to_string(r.parity), r.isotropic ? "yes" : "no"});
    }
    return o;
}

Output block_output(i64 lo, i64 hi, Prime p, const std::function<int(i64)>& block) {
    std::map<int, std::vector<i64>> classes;
    for (i64 l = lo; l <= hi; ++l) classes[block(l)].push_back(l);
    Output o;
    o.j = {{"classes", json::array()}};
    o.table.header = {"block", "weights"};
    for (const auto& [a, ws] : classes) {
        o.j["classes"].push_back({{"block", a}, {"weights", ws}});
        std::string s;
        for (std::size_t i = 0; i < ws.size(); ++i) s += (i ? "," : "") + std::to_string(ws[i]);
        o.table.rows.push_back({std::to_string(a), s});
    }
    o.j["count"] = classes.size();
    (void)p;
    return o;
}

void emit(const Output& o, const std::string& format) {
    if (format == "json") {
        std::cout << o.j.dump() << '\n';
    } else if (format == "tsv") {
        o.table.write_tsv(std::cout);
    } else {
        o.table.write_text(std::cout);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modular representation combinatorics for SL(2), SpO(2|1), G_rT and SpO(2n|2m+1)"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--p", g.p, "odd prime characteristic")->capture_default_str();
    app.add_option("--r", g.r, "Frobenius kernel height")->capture_default_str();
    app.add_option("--n", g.n, "symplectic rank")->capture_default_str();
    app.add_option("--m", g.m, "orthogonal rank")->capture_default_str();
    app.add_option("--type", g.type, "odd: SpO(2n|2m+1), even: SpO(2n|2m)")
        ->check(CLI::IsMember({"odd", "even"}))
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"json", "tsv", "text"}))
        ->capture_default_str();
    app.add_flag("--seed-irrelevant", g.seed_irrelevant, "accepted for compatibility; nothing is random");

    i64 k = 0, l = 0, j = 0;
    bool frobenius = false, serial = false, bracket = false;
    std::string window, side = "minus", lambda, flag, box, symmetry = "source";
    int r_max = 2;
    std::function<Output()> action;

    auto sub = [&](const char* name, const char* help, std::function<Output()> run) {
        CLI::App* s = app.add_subcommand(name, help);
        s->callback([&action, run] { action = run; });
        return s;
    };

    sub("decompose-sl2", "composition factors of H0(k) for SL(2)",
        [&] { return factors_output(decompose_sl2(k, g.prime())); })
        ->add_option("--k", k)->required();
    sub("decompose-spo21", "composition factors of H0_-(l) for SpO(2|1)",
        [&] { return factors_output(comp_factors_H0_spo(l, g.prime())); })
        ->add_option("--l", l)->required();
    sub("decompose-grt", "composition factors of H0_{r,-}(l) for G_rT",
        [&] { return factors_output(comp_factors_r(l, g.frobenius_r(), g.prime())); })
        ->add_option("--l", l)->required();

    auto* socle = sub("socle", "basis of the socle L(l) inside H0(l)", [&] {
        const Side sd = side == "plus" ? Side::PLUS : Side::MINUS;
        const auto ms = frobenius ? socle_basis_r(l, g.frobenius_r(), g.prime(), sd) : socle_basis(l, g.prime(), sd);
        return Output{{{"monomials", monomials_json(ms, l, frobenius)}}, monomial_table(ms, l, frobenius)};
    });
    socle->add_option("--l", l)->required();
    socle->add_option("--side", side)->check(CLI::IsMember({"minus", "plus"}));
    socle->add_flag("--frobenius", frobenius, "G_rT version");

    auto* hom = sub("hom", "dimension and parity of Hom(H0_+(-k), H0_-(l))", [&] {
        Output o;
        if (frobenius) {
            const int d = hom_r(k, l, g.frobenius_r(), g.prime());
            o.j = {{"dim", d}};
            o.table = {{"dim"}, {{std::to_string(d)}}};
        } else {
            const HomDim h = hom_dim(k, l, g.prime());
            o.j = {{"dim", h.dim}, {"parity", to_string(h.parity)}};
            o.table = {{"dim", "parity"}, {{std::to_string(h.dim), to_string(h.parity)}}};
        }
        return o;
    });
    hom->add_option("--k", k)->required();
    hom->add_option("--l", l)->required();
    hom->add_flag("--frobenius", frobenius, "G_rT version");

    auto* psi = sub("psi-table", "coefficients of psi_{-k,k-1-2j} (or psi_{r,k} with --frobenius)", [&] {
        const MorphismTable t = frobenius ? psi_r_table(k, g.frobenius_r(), g.prime()) : psi_table(k, j, g.prime());
        Output o{io::to_json(t, frobenius), {{"source_i", "source_eps", "target_i", "target_eps", "valid", "coeff"}, {}}};
        for (const auto& row : t.rows)
            o.table.rows.push_back({std::to_string(row.source.i), std::to_string(row.source.eps),
                                    std::to_string(row.target.i), std::to_string(row.target.eps),
                                    row.target_valid ? "1" : "0", std::to_string(row.coeff)});
        return o;
    });
    psi->add_option("--k", k)->required();
    psi->add_option("--j", j);
    psi->add_flag("--frobenius", frobenius, "G_rT version");

    auto* kernel = sub("kernel", "monomial basis of ker psi_{-k,k-1-2j}", [&] {
        const auto ms = kernel_basis(k, j, g.prime());
        return Output{{{"monomials", monomials_json(ms, k, false)}}, monomial_table(ms, k, false)};
    });
    kernel->add_option("--k", k)->required();
    kernel->add_option("--j", j)->required();

    auto* kic = sub("ker-im-coker", "composition factors of kernel, image and cokernel of psi", [&] {
        const KerImCoker x = frobenius ? psi_r_ker_im_coker(k, g.frobenius_r(), g.prime())
                                       : ker_im_coker_factors(k, j, g.prime());
        Output o;
        o.j = {{"ker", io::to_json(x.ker)["factors"]},
               {"im", io::to_json(x.im)["factors"]},
               {"coker", io::to_json(x.coker)["factors"]}};
        o.table.header = {"part", "hw", "mult"};
        for (const auto& [name, f] : {std::pair<const char*, const FactorMultiset*>{"ker", &x.ker},
                                      {"im", &x.im}, {"coker", &x.coker}})
            for (i64 w : f->weights_desc())
                o.table.rows.push_back({name, std::to_string(w), std::to_string(f->mult(w))});
        return o;
    });
    kic->add_option("--k", k)->required();
    kic->add_option("--j", j);
    kic->add_flag("--frobenius", frobenius, "G_rT version");

    sub("blocks", "block classes of SpO(2|1) weights in a window", [&] {
          const auto [lo, hi] = parse_window(window);
          const Prime p = g.prime();
          return block_output(lo, hi, p, [p](i64 x) { return block_of(x, p); });
      })->add_option("--window", window, "a:b")->required();
    sub("blocks-grt", "block classes of G_rT weights in a window", [&] {
          const auto [lo, hi] = parse_window(window);
          const Prime p = g.prime();
          return block_output(lo, hi, p, [p](i64 x) { return block_of_r(x, p); });
      })->add_option("--window", window, "a:b")->required();

    sub("roots", "root system", [&] { return root_output(roots(g.shape())); });
    sub("phiplus", "positive roots of a flag", [&] {
          const GroupShape s = g.shape();
          return root_output(phi_plus(parse_flag(flag, s), s));
      })->add_option("--flag", flag, "e.g. 1,-2,1bar (default: standard)");

    sub("chain", "chain of Borels from the standard flag to its negative", [&] {
        const Chain c = chain_of_borels(g.shape());
        Output o{io::to_json(c), {{"step", "flag", "move", "alpha", "levi", "to"}, {}}};
        for (std::size_t i = 0; i < c.steps.size(); ++i) {
            const auto& s = c.steps[i];
            o.table.rows.push_back({std::to_string(i + 1), s.from.str(), s.move.str(), str(s.alpha.vec),
                                    to_string(s.levi), s.to.str()});
        }
        return o;
    });

    sub("rho", "rho0(F), rho1(F) and rho(F)", [&] {
          const GroupShape s = g.shape();
          const RhoParts rp = rho_parts(parse_flag(flag, s), s);
          Output o;
          o.j = {{"rho0", io::to_json(rp.rho0)}, {"rho1", io::to_json(rp.rho1)}, {"rho", io::to_json(rp.rho)}};
          o.table = {{"name", "weight"}, {{"rho0", str(rp.rho0)}, {"rho1", str(rp.rho1)}, {"rho", str(rp.rho)}}};
          return o;
      })->add_option("--flag", flag);

    auto* lb = sub("lambda-bracket", "lambda<F>", [&] {
        const GroupShape s = g.shape();
        const WeightVec w = lambda_bracket(parse_lambda(lambda, s), parse_flag(flag, s), s, g.frobenius_r(), g.prime());
        return Output{{{"weight", io::to_json(w)}}, {{"weight"}, {{str(w)}}}};
    });
    lb->add_option("--lambda", lambda, "comma-separated integers")->required();
    lb->add_option("--flag", flag);

    auto* cz = sub("char-z", "character of Z'_{r,F}(lambda)", [&] {
        const GroupShape s = g.shape();
        const Flag f = parse_flag(flag, s);
        WeightVec w = parse_lambda(lambda, s);
        if (bracket) w = lambda_bracket(w, f, s, g.frobenius_r(), g.prime());
        const LaurentPolyN ch = ch_Zr_flag(w, f, s, g.frobenius_r(), g.prime());
        Output o{io::to_json(ch), io::poly_table(ch)};
        o.j["dim"] = ch.total();
        return o;
    });
    cz->add_option("--lambda", lambda)->required();
    cz->add_option("--flag", flag);
    cz->add_flag("--bracket", bracket, "use lambda<F> as the highest weight");

    auto graph = [&] {
        const GroupShape s = g.shape();
        if (r_max < 0) throw std::invalid_argument("--r-max must be nonnegative");
        std::set<int> rs;
        for (int r = 1; r <= r_max; ++r) rs.insert(r);
        return build_graph(parse_box(box, s), s, rs, g.prime(),
                           symmetry == "both" ? NonisoSymmetry::BOTH_RESIDUES : NonisoSymmetry::SOURCE_RESIDUE);
    };
    auto* lg = sub("linkage-graph", "linkage moves between weights in a box", [&] {
        const LinkageGraph gr = graph();
        Output o{io::to_json(gr), {{"src", "dst", "kind", "alpha", "r"}, {}}};
        for (const auto& e : gr.edges)
            o.table.rows.push_back({str(e.source), str(e.target), to_string(e.kind), str(e.alpha), std::to_string(e.r)});
        return o;
    });
    auto* comp = sub("components", "connected components of the linkage graph", [&] {
        const auto cs = components(graph());
        Output o;
        o.j = {{"components", json::array()}};
        o.table.header = {"component", "size", "weights"};
        for (std::size_t i = 0; i < cs.size(); ++i) {
            json ws = json::array();
            std::string s;
            for (std::size_t t = 0; t < cs[i].size(); ++t) {
                ws.push_back(cs[i][t].coords());
                s += (t ? ";" : "") + str(cs[i][t]);
            }
            o.j["components"].push_back(ws);
            o.table.rows.push_back({std::to_string(i + 1), std::to_string(cs[i].size()), s});
        }
        return o;
    });
    for (auto* s : {lg, comp}) {
        s->add_option("--box", box, "a:b per coordinate, comma-separated")->required();
        s->add_option("--r-max", r_max, "use r = 1..r_max")->capture_default_str();
        s->add_option("--symmetry", symmetry, "non-isotropic residue convention")
            ->check(CLI::IsMember({"source", "both"}));
    }

    sub("verify-all", "run every oracle-equivalence sweep", [&] {
          VerifyOptions opts;
          opts.parallel = !serial;
          Output o;
          o.j = {{"criteria", json::array()}};
          o.table.header = {"id", "status", "name", "detail", "seconds"};
          bool ok = true;
          for (const auto& res : verify_all(opts)) {
              o.j["criteria"].push_back(io::to_json(res));
              std::ostringstream secs;
              secs.precision(2);
              secs << std::fixed << res.seconds;
              o.table.rows.push_back({std::to_string(res.id), res.pass ? "PASS" : "FAIL", res.name, res.detail, secs.str()});
              ok = ok && res.pass;
          }
          o.j["pass"] = ok;
          o.code = ok ? 0 : kExitMismatch;
          return o;
      })->add_flag("--serial", serial, "run the sweeps one after another");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitInvalid;
    }

    try {
        const Output o = action();
        emit(o, g.format);
        return o.code;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return kExitInvalid;
}
