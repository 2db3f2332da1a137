#include "commands.hpp"

#include "greenbox/arith/factor.hpp"
#include "greenbox/cells/cell_structure.hpp"
#include "greenbox/dihedral/dihedral_algebra.hpp"
#include "greenbox/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

namespace greenbox::cli {

using json = nlohmann::ordered_json;
using namespace greenbox::dihedral;

namespace {

json coeff_json(const arith::LaurentInt& c) {
    json terms = json::array();
    for (int e = c.low(); e <= c.high(); ++e)
        if (sgn(c.coeff(e)) != 0) terms.push_back({{"exponent", e}, {"coeff", c.coeff(e).get_str()}});
    return terms;
}

std::vector<std::string> cell_keys(int n, const cells::CellStructure& cs) {
    std::vector<std::vector<int>> jc;
    for (const auto& j : cs.jcells) jc.push_back(j.elements);
    return dihedral_cell_keys(n, jc);
}

}  // namespace

int cmd_dihedral_mult(const Config& c, std::ostream& out) {
    if (c.format != Format::Table && c.format != Format::Json) throw InvalidInput("output format not supported by dihedral mult");
    if (c.words.size() != 2) throw InvalidInput("dihedral mult takes two words");
    if (c.n < 0) throw InvalidInput("n must be positive, or 0 for the infinite group");
    if (c.n > kMaxDihedralOrder) throw BoundExceeded("dihedral order above " + std::to_string(kMaxDihedralOrder));
    DihedralWord x = parse_word(c.words[0], c.n), y = parse_word(c.words[1], c.n);
    HeckeElement p = c.n == kInfinite ? cg_multiply_infinite(x, y) : cg_multiply_finite(c.n, x, y);
    if (c.format == Format::Json) {
        json terms = json::array();
        for (const auto& [w, k] : p.terms())
            terms.push_back({{"word", w.to_string()}, {"coeff", coeff_json(k)}, {"bracket", bracket_form(k)}});
        out << json{{"n", c.n == kInfinite ? json("infinity") : json(c.n)},
                    {"left", x.to_string()},
                    {"right", y.to_string()},
                    {"expansion", p.to_bracket_string()},
                    {"terms", terms}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "b" << x.to_string() << " * b" << y.to_string() << " = " << p.to_bracket_string() << "\n";
    return 0;
}

int cmd_dihedral_cells(const Config& c, std::ostream& out) {
    if (c.format == Format::Csv) throw InvalidInput("output format not supported by dihedral cells");
    auto alg = dihedral_based_algebra(c.n, parse_vmode(c.v));
    auto cs = cells::compute_cells(alg);
    auto keys = cell_keys(c.n, cs);
    if (c.format == Format::Json) {
        json j = json::parse(cells::eggbox_json(cs, keys, "I2(" + std::to_string(c.n) + ")", c.n));
        j["sandwich_pair"] = cells::verify_sandwich_pair(alg, cs).pass;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (c.format == Format::Dot) {
        out << cells::jorder_dot(cs, keys);
        return 0;
    }
    out << "I2(" << c.n << ") v=" << to_string(parse_vmode(c.v)) << "\n";
    for (size_t j = cs.jcells.size(); j-- > 0;) {
        const auto& jc = cs.jcells[j];
        std::vector<std::vector<std::string>> text(jc.grid.size());
        size_t width = 1;
        for (size_t r = 0; r < jc.grid.size(); ++r)
            for (const auto& h : jc.grid[r]) {
                std::string s;
                for (int e : h.elements) s += (s.empty() ? "b" : ",b") + alg.name(e);
                if (h.strictly_idempotent()) s += " *";
                width = std::max(width, s.size());
                text[r].push_back(s);
            }
        std::string rule = "+";
        for (size_t k = 0; k < text[0].size(); ++k) rule += std::string(width + 2, '-') + "+";
        out << "J_" << keys[j] << "\n" << rule << "\n";
        for (const auto& row : text) {
            out << "|";
            for (const auto& s : row) out << " " << std::left << std::setw(static_cast<int>(width)) << s << std::right << " |";
            out << "\n" << rule << "\n";
        }
    }
    auto report = cells::verify_sandwich_pair(alg, cs);
    out << "sandwich pair: " << (report.pass ? "yes" : "no (" + report.first_failure + ")") << "\n";
    return 0;
}

int cmd_dihedral_simples(const Config& c, std::ostream& out) {
    if (c.format != Format::Table && c.format != Format::Json) throw InvalidInput("output format not supported by dihedral simples");
    auto s = dihedral_simples(c.n, parse_vmode(c.v));
    if (c.format == Format::Table) {
        out << "I2(" << c.n << ") v=" << to_string(s.mode) << "\napex  label      dim\n";
        for (const auto& x : s.simples)
            out << std::setw(4) << x.apex << "  " << std::left << std::setw(9) << x.label << std::right << "  " << x.dim << "\n";
        out << "sum of squares: " << s.sum_of_squares << " (2n = " << 2 * c.n << ")\n";
        return 0;
    }
    json list = json::array();
    for (const auto& x : s.simples) list.push_back({{"apex", x.apex}, {"label", x.label}, {"dim", x.dim}});
    std::vector<std::size_t> counts;
    for (const auto& a : s.apexes)
        counts.push_back(static_cast<std::size_t>(std::count_if(s.simples.begin(), s.simples.end(),
                                                                [&](const DihedralSimple& x) { return x.apex == a; })));
    out << json{{"family", "I2(" + std::to_string(c.n) + ")"},
                {"n", c.n},
                {"v", to_string(s.mode)},
                {"apexes", s.apexes},
                {"counts", counts},
                {"simples", list},
                {"sum_of_squares", s.sum_of_squares},
                {"semisimple", s.semisimple}}
               .dump(2)
        << "\n";
    return 0;
}

int cmd_dihedral_ranks(const Config& c, std::ostream& out) {
    if (c.format != Format::Table && c.format != Format::Json) throw InvalidInput("output format not supported by dihedral ranks");
    VMode mode = parse_vmode(c.v);
    auto ranks = dihedral_sandwich_ranks(c.n, mode);
    auto middle = middle_algebra(c.n, mode);
    if (c.format == Format::Json) {
        json list = json::array();
        for (const auto& r : ranks)
            list.push_back({{"jcell", r.jcell}, {"factor", r.factor}, {"root", r.root}, {"rank", r.rank}, {"matrix", r.matrix}});
        out << json{{"n", c.n},
                    {"v", to_string(mode)},
                    {"minimal_polynomial", arith::to_string(middle.minimal_polynomial, "X")},
                    {"matches_p", middle.matches_p},
                    {"matches_p_prime", middle.matches_p_prime},
                    {"ranks", list}}
                   .dump(2)
            << "\n";
        return 0;
    }
    out << "I2(" << c.n << ") v=" << to_string(mode) << "\n";
    out << "middle minimal polynomial: " << arith::to_string(middle.minimal_polynomial, "X") << "\n";
    out << "cell  factor        rank  matrix\n";
    for (const auto& r : ranks)
        out << std::setw(4) << r.jcell << "  " << std::left << std::setw(12) << (r.factor.empty() ? "-" : r.factor)
            << std::right << std::setw(6) << r.rank << "  " << r.matrix << "\n";
    return 0;
}

}  // namespace greenbox::cli
