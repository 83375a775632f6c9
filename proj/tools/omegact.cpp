#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "omegact/expr.hpp"

using namespace omegact;
using namespace omegact::cli;

namespace {

std::size_t default_truncate() {
    const char* env = std::getenv("OMEGACT_TRUNCATE");
    if (!env || !*env) return 8;
    try {
        std::size_t used = 0;
        long v = std::stol(env, &used);
        if (used == std::string(env).size() && v >= 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("OMEGACT_TRUNCATE must be a nonnegative integer, got '") + env + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constant terms, partial fractions and lattice-point generating functions"};
    app.require_subcommand(1);
    Global g;
    long truncate = -1;
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--truncate", truncate, "series truncation order (default $OMEGACT_TRUNCATE or 8)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--out", g.out, "write output to FILE");
    app.add_flag("--cross-check", g.cross_check, "compare with the brute-force oracle");

    OmegaArgs om;
    auto* omega = app.add_subcommand("omega", "CT or Omega>= of an Elliott-rational function");
    omega->fallthrough();
    omega->add_option("mode", om.mode, "ct or geq")->required()->check(CLI::IsMember({"ct", "geq"}));
    omega->add_option("expr", om.expr, "rational expression");
    omega->add_option("--vars", om.vars, "declared variables, low to high")->delimiter(',');
    omega->add_option("--eliminate", om.eliminate, "variables to eliminate")->delimiter(',');
    omega->add_option("--elim-order", om.elim_order, "elimination order override")->delimiter(',');
    omega->add_option("--rho", om.rho, "order matrix, rows separated by ';'");
    omega->add_option("--system", om.system_file, "matrix file instead of an expression");
    omega->add_flag("--strict", om.strict, "positive solutions only (with --system)");

    CountArgs ca;
    auto* count = app.add_subcommand("count", "E(x), Ebar(x) and reciprocity for a linear system");
    count->fallthrough();
    count->add_option("file", ca.system_file, "matrix file")->required();
    count->add_option("--elim-order", ca.elim_order, "elimination order")->delimiter(',');

    PfdArgs pa;
    auto* pfd = app.add_subcommand("pfd", "partial fractions of a univariate rational function");
    pfd->fallthrough();
    pfd->add_option("expr", pa.expr)->required();
    pfd->add_option("--var", pa.var, "variable name");
    pfd->add_flag("--at-origin", pa.at_origin, "fractional part at var^m");
    pfd->add_option("--prime", pa.prime, "irreducible factor P");

    DedekindArgs da;
    auto* ded = app.add_subcommand("dedekind", "higher-dimensional Dedekind sums");
    ded->fallthrough();
    ded->add_option("values", da.values, "n a1 .. am, or a0 .. am with --reciprocity")->required();
    ded->add_flag("--reciprocity", da.reciprocity, "check reciprocity for a0 .. am");

    WalksArgs wa;
    auto* walks = app.add_subcommand("walks", "lattice walk generating functions");
    walks->fallthrough();
    walks->add_option("kind", wa.kind)->required()->check(CLI::IsMember({"slit", "dyck", "quarter", "catalan"}));
    walks->add_option("--gamma", wa.gamma, "step generating function in x, y");
    walks->add_option("--m", wa.m, "height bound for dyck (0: unbounded)");
    walks->add_option("--p", wa.p, "endpoint (p, 0) for slit");
    walks->add_flag("--csv", wa.csv, "coefficient table as CSV");

    HadamardArgs ha;
    auto* had = app.add_subcommand("hadamard", "Hadamard product of two rational series");
    had->fallthrough();
    had->add_option("f", ha.f)->required();
    had->add_option("g", ha.g)->required();
    had->add_option("--var", ha.var, "variable name");

    OracleArgs oa;
    auto* orc = app.add_subcommand("oracle", "brute-force references");
    orc->fallthrough();
    orc->add_option("kind", oa.kind)->required()->check(CLI::IsMember({"solve", "walks", "dedekind", "dyson", "binomial"}));
    orc->add_option("args", oa.args);
    orc->add_flag("--strict", oa.strict);
    orc->add_option("--steps", oa.steps, "dx,dy[,w];...");
    orc->add_option("--constraint", oa.constraint, "none, slit, diagonal, band:LO:HI or quarter");
    orc->add_option("--start", oa.start, "x,y");
    orc->add_option("--bound", oa.bound, "parameter bound for binomial");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        g.truncate = truncate >= 0 ? static_cast<std::size_t>(truncate) : default_truncate();
        std::ofstream file;
        if (!g.out.empty()) {
            file.open(g.out);
            if (!file) throw UsageError("cannot write " + g.out);
        }
        std::ostream& os = g.out.empty() ? std::cout : file;
        if (omega->parsed()) return run_omega(om, g, os);
        if (count->parsed()) return run_count(ca, g, os);
        if (pfd->parsed()) return run_pfd(pa, g, os);
        if (ded->parsed()) return run_dedekind(da, g, os);
        if (walks->parsed()) return run_walks(wa, g, os);
        if (had->parsed()) return run_hadamard(ha, g, os);
        if (orc->parsed()) return run_oracle(oa, g, os);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
