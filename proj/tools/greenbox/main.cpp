#include "commands.hpp"

#include "greenbox/error.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace greenbox;
using namespace greenbox::cli;

int main(int argc, char** argv) {
    CLI::App app{"Cells, sandwich data and simple modules of diagram and dihedral Hecke algebras"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "greenbox 0.1.0");

    Config cfg;
    std::string format = "table";
    bool verbose = false;
    std::function<int(const Config&, std::ostream&)> action;

    auto with_format = [&](CLI::App* sub, const std::string& allowed) {
        sub->add_option("--format", format, "Output format: " + allowed);
        sub->add_flag("--verbose", verbose, "Report timing on stderr");
    };
    auto diagram_opts = [&](CLI::App* sub, bool delta) {
        sub->add_option("--family", cfg.family, "t, pt, p, pp, robr, mo, br, tl, ro, pro, sym, psym")->required();
        sub->add_option("--n", cfg.n, "Number of strands")->required();
        if (delta) sub->add_option("--delta", cfg.delta, "'generic' or a rational p/q");
    };

    auto* en = app.add_subcommand("enumerate", "List or count the members of a family");
    diagram_opts(en, false);
    en->add_flag("--count", cfg.count_only, "Only print the count");
    with_format(en, "table, json, csv");
    en->callback([&] { action = cmd_enumerate; });

    auto* ce = app.add_subcommand("cells", "Summary of the cell partition");
    diagram_opts(ce, true);
    with_format(ce, "table, json, csv");
    ce->callback([&] { action = cmd_cells; });

    auto* eg = app.add_subcommand("eggbox", "Egg-box diagram of each J-cell");
    diagram_opts(eg, true);
    eg->add_option("--lambda", cfg.lambda, "Only this through-strand count");
    with_format(eg, "table, json, dot");
    eg->callback([&] { action = cmd_eggbox; });

    auto* gr = app.add_subcommand("gram", "Gram matrix, determinant and rank of a cell");
    diagram_opts(gr, true);
    gr->add_option("--lambda", cfg.lambda, "Through-strand count")->required();
    with_format(gr, "table, json");
    gr->callback([&] { action = cmd_gram; });

    auto* si = app.add_subcommand("simples", "Apexes, counts and dimensions of simple modules");
    diagram_opts(si, true);
    si->add_option("--p", cfg.p, "Characteristic (0 for zero); positive values give counts only");
    with_format(si, "table, json, csv");
    si->callback([&] { action = cmd_simples; });

    auto* co = app.add_subcommand("counts", "Closed-form against enumerated left and right cell counts");
    diagram_opts(co, false);
    with_format(co, "table, json, csv");
    co->callback([&] { action = cmd_counts; });

    auto* di = app.add_subcommand("dihedral", "Dihedral Hecke algebras in the KL basis");
    di->require_subcommand(1);
    auto* dm = di->add_subcommand("mult", "Product of two KL basis elements");
    dm->add_option("--n", cfg.n, "Order of I2(n); omit or 0 for the infinite group");
    dm->add_option("words", cfg.words, "Two reduced words, e.g. 1212 21212")->expected(2)->required();
    with_format(dm, "table, json");
    dm->callback([&] { action = cmd_dihedral_mult; });
    auto* dc = di->add_subcommand("cells", "Cell structure of I2(n)");
    dc->add_option("--n", cfg.n, "Order")->required();
    dc->add_option("--v", cfg.v, "'generic' or 1");
    with_format(dc, "table, json, dot");
    dc->callback([&] { action = cmd_dihedral_cells; });
    auto* ds = di->add_subcommand("simples", "Simple modules of I2(n), n odd");
    ds->add_option("--n", cfg.n, "Order")->required();
    ds->add_option("--v", cfg.v, "'generic' or 1");
    with_format(ds, "json (default), table");
    ds->callback([&] {
        if (ds->count("--format") == 0) format = "json";
        action = cmd_dihedral_simples;
    });
    auto* dr = di->add_subcommand("ranks", "Sandwich matrix ranks of I2(n), n odd");
    dr->add_option("--n", cfg.n, "Order")->required();
    dr->add_option("--v", cfg.v, "'generic' or 1");
    with_format(dr, "table, json");
    dr->callback([&] { action = cmd_dihedral_ranks; });

    auto* rs = app.add_subcommand("rsk", "Robinson-Schensted tableaux of a permutation");
    rs->add_option("word", cfg.words, "One-line notation, e.g. 231 or 2,3,1")->expected(1)->required();
    with_format(rs, "table, json");
    rs->callback([&] { action = cmd_rsk; });

    auto* ch = app.add_subcommand("check", "Run the invariant suites");
    ch->add_option("--seed", cfg.seed, "Seed for randomized suites");
    ch->add_option("--triples", cfg.triples, "Random samples per family");
    ch->add_option("--suite", cfg.suites, "Run only the named suites");
    with_format(ch, "table, json");
    ch->callback([&] { action = cmd_check; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        cfg.format = parse_format(format);
        auto start = std::chrono::steady_clock::now();
        int code = action(cfg, std::cout);
        if (verbose) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
            std::cerr << "elapsed " << ms.count() << " ms\n";
        }
        return code;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
