#include "commands.hpp"

#include "greenbox/arith/factor.hpp"
#include "greenbox/cells/cell_structure.hpp"
#include "greenbox/check/suites.hpp"
#include "greenbox/diagrams/factorize.hpp"
#include "greenbox/diagrams/family.hpp"
#include "greenbox/error.hpp"
#include "greenbox/sandwich/closed_forms.hpp"
#include "greenbox/sandwich/diagram_algebra.hpp"
#include "greenbox/sandwich/gram.hpp"
#include "greenbox/sandwich/simples.hpp"
#include "greenbox/symgroup/rsk.hpp"

#include "json.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace greenbox::cli {

using diagrams::Family;
using json = nlohmann::ordered_json;
using sandwich::Delta;

namespace {

Family family_of(const Config& c) {
    if (c.family.empty()) throw InvalidInput("--family is required");
    return diagrams::parse_family(c.family);
}

void check_n(int n) {
    if (n < 0) throw InvalidInput("n must be nonnegative");
}

void require(Format f, std::initializer_list<Format> allowed, const std::string& cmd) {
    for (Format a : allowed)
        if (a == f) return;
    throw InvalidInput("output format not supported by " + cmd);
}

std::string delta_text(const Delta& d) { return d.is_generic() ? "generic" : d.to_string(); }

std::vector<std::string> through_keys(const sandwich::DiagramBasis& basis, const cells::CellStructure& cs) {
    std::vector<std::string> keys;
    for (const auto& jc : cs.jcells)
        keys.push_back(std::to_string(basis.elements[static_cast<size_t>(jc.elements[0])].through_strands()));
    return keys;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::vector<int> parse_word_digits(const std::string& text) {
    std::vector<int> w;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                w.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw InvalidInput("malformed permutation: " + text);
            }
        }
        return w;
    }
    for (char ch : text) {
        if (ch < '1' || ch > '9') throw InvalidInput("malformed permutation: " + text);
        w.push_back(ch - '0');
    }
    return w;
}

json tableau_json(const symgroup::Tableau& t) {
    json rows = json::array();
    for (const auto& r : t) rows.push_back(r);
    return rows;
}

}  // namespace

Format parse_format(const std::string& text) {
    if (text == "table") return Format::Table;
    if (text == "json") return Format::Json;
    if (text == "dot") return Format::Dot;
    if (text == "csv") return Format::Csv;
    throw InvalidInput("unknown format '" + text + "'");
}

int cmd_enumerate(const Config& c, std::ostream& out) {
    require(c.format, {Format::Table, Format::Json, Format::Csv}, "enumerate");
    Family f = family_of(c);
    check_n(c.n);
    auto elems = diagrams::enumerate(f, c.n);
    if (c.format == Format::Json) {
        json j{{"family", diagrams::tag(f)}, {"n", c.n}, {"count", elems.size()}};
        if (!c.count_only) {
            json list = json::array();
            for (const auto& d : elems) list.push_back({{"diagram", d.to_text()}, {"through", d.through_strands()}});
            j["elements"] = list;
        }
        print_json(out, j);
    } else if (c.format == Format::Csv) {
        out << "index,through,diagram\n";
        if (!c.count_only)
            for (size_t i = 0; i < elems.size(); ++i)
                out << i << "," << elems[i].through_strands() << ",\"" << elems[i].to_text() << "\"\n";
    } else {
        out << diagrams::display_name(f) << " n=" << c.n << ": " << elems.size() << " elements\n";
        if (!c.count_only)
            for (size_t i = 0; i < elems.size(); ++i)
                out << std::setw(6) << i << "  " << elems[i].through_strands() << "  " << elems[i].to_text() << "\n";
    }
    return 0;
}

int cmd_cells(const Config& c, std::ostream& out) {
    require(c.format, {Format::Table, Format::Json, Format::Csv}, "cells");
    Family f = family_of(c);
    check_n(c.n);
    Delta d = sandwich::parse_delta(c.delta);
    auto basis = sandwich::diagram_basis(f, c.n);
    auto cs = cells::compute_cells(sandwich::diagram_algebra(basis, d));
    auto keys = through_keys(*basis, cs);
    if (c.format == Format::Json) {
        print_json(out, json::parse(cells::eggbox_json(cs, keys, diagrams::tag(f), c.n)));
        return 0;
    }
    const bool csv = c.format == Format::Csv;
    if (csv)
        out << "lambda,order_rank,left,right,h_size,size,idempotent\n";
    else
        out << diagrams::display_name(f) << " n=" << c.n << " delta=" << delta_text(d) << ": " << basis->elements.size()
            << " elements, " << cs.jcells.size() << " J-cells\n"
            << "lambda  order  left  right  |H|  size  idempotent\n";
    for (size_t j = cs.jcells.size(); j-- > 0;) {
        const auto& jc = cs.jcells[j];
        auto box = cells::eggbox(cs, static_cast<int>(j));
        std::string h = std::to_string(box.grid[0][0].h_size);
        for (const auto& row : box.grid)
            for (const auto& e : row)
                if (e.h_size != box.grid[0][0].h_size) h = "mixed";
        if (csv)
            out << keys[j] << "," << jc.order_rank << "," << box.cols << "," << box.rows << "," << h << ","
                << jc.elements.size() << "," << (jc.idempotent ? "yes" : "no") << "\n";
        else
            out << std::setw(6) << keys[j] << std::setw(7) << jc.order_rank << std::setw(6) << box.cols << std::setw(7)
                << box.rows << std::setw(5) << h << std::setw(6) << jc.elements.size() << "  "
                << (jc.idempotent ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_eggbox(const Config& c, std::ostream& out) {
    require(c.format, {Format::Table, Format::Json, Format::Dot}, "eggbox");
    Family f = family_of(c);
    check_n(c.n);
    Delta d = sandwich::parse_delta(c.delta);
    auto basis = sandwich::diagram_basis(f, c.n);
    auto cs = cells::compute_cells(sandwich::diagram_algebra(basis, d));
    auto keys = through_keys(*basis, cs);
    if (c.format == Format::Json) {
        print_json(out, json::parse(cells::eggbox_json(cs, keys, diagrams::tag(f), c.n)));
    } else if (c.format == Format::Dot) {
        out << cells::jorder_dot(cs, keys);
    } else {
        for (size_t j = cs.jcells.size(); j-- > 0;) {
            if (c.lambda >= 0 && keys[j] != std::to_string(c.lambda)) continue;
            out << "J lambda=" << keys[j] << " (" << cs.jcells[j].elements.size() << " elements)\n"
                << cells::eggbox_ascii(cs, static_cast<int>(j));
        }
    }
    return 0;
}

int cmd_gram(const Config& c, std::ostream& out) {
    require(c.format, {Format::Table, Format::Json}, "gram");
    Family f = family_of(c);
    check_n(c.n);
    if (c.lambda < 0) throw InvalidInput("--lambda is required");
    Delta d = sandwich::parse_delta(c.delta);
    auto g = sandwich::gram_matrix(f, c.n, c.lambda);
    const auto& m = g.matrix;
    std::optional<std::string> det;
    if (m.rows() == m.cols()) det = arith::factored_string(sandwich::gram_determinant(g));
    std::size_t rank = sandwich::gram_rank(g, d);
    if (c.format == Format::Json) {
        json rows = json::array();
        for (size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (size_t k = 0; k < m.cols(); ++k) row.push_back(arith::to_string(m(i, k)));
            rows.push_back(row);
        }
        json j{{"family", diagrams::tag(f)}, {"n", c.n},          {"lambda", c.lambda}, {"delta", delta_text(d)},
               {"rows", m.rows()},          {"cols", m.cols()}, {"matrix", rows}};
        j["determinant"] = det ? json(*det) : json(nullptr);
        j["rank"] = rank;
        print_json(out, j);
        return 0;
    }
    out << "Gram matrix " << diagrams::display_name(f) << " n=" << c.n << " lambda=" << c.lambda << " (" << m.rows()
        << "x" << m.cols() << ")\n"
        << arith::to_string(m) << "\n";
    out << "det: " << (det ? *det : std::string("n/a (not square)")) << "\n";
    out << "rank at delta=" << delta_text(d) << ": " << rank << "\n";
    return 0;
}

int cmd_simples(const Config& c, std::ostream& out) {
    require(c.format, {Format::Table, Format::Json, Format::Csv}, "simples");
    Family f = family_of(c);
    check_n(c.n);
    if (c.p < 0) throw InvalidInput("characteristic must be nonnegative");
    Delta d = sandwich::parse_delta(c.delta);
    std::vector<int> apexes;
    std::vector<std::size_t> counts;
    std::vector<sandwich::SimpleModule> simples;
    if (c.p > 0) {
        for (const auto& [apex, count] : sandwich::simple_count(f, c.n, d, c.p)) {
            apexes.push_back(apex);
            counts.push_back(count);
        }
    } else {
        auto table = sandwich::simple_table(f, c.n, d);
        apexes = table.apexes;
        simples = table.simples;
        for (int a : apexes) {
            std::size_t k = 0;
            for (const auto& s : simples) k += s.apex == a;
            counts.push_back(k);
        }
    }
    std::vector<std::string> count_text;
    for (auto k : counts) count_text.push_back(std::to_string(k));

    if (c.format == Format::Json) {
        json list = json::array();
        for (const auto& s : simples) {
            json e{{"apex", s.apex}, {"label", s.label}};
            e["dim"] = s.dim ? json(*s.dim) : json(nullptr);
            list.push_back(e);
        }
        print_json(out, json{{"family", diagrams::tag(f)},
                             {"n", c.n},
                             {"delta", delta_text(d)},
                             {"characteristic", c.p},
                             {"apexes", apexes},
                             {"counts", counts},
                             {"simples", list}});
        return 0;
    }
    if (c.format == Format::Csv) {
        out << "apex,label,dim\n";
        for (const auto& s : simples) out << s.apex << ",\"" << s.label << "\"," << (s.dim ? std::to_string(*s.dim) : "") << "\n";
        return 0;
    }
    out << diagrams::display_name(f) << " n=" << c.n << " delta=" << delta_text(d)
        << " characteristic=" << (c.p ? std::to_string(c.p) : std::string("0")) << "\n";
    if (!simples.empty()) {
        out << "apex  label            dim\n";
        for (const auto& s : simples)
            out << std::setw(4) << s.apex << "  " << std::left << std::setw(15) << s.label << std::right << "  "
                << (s.dim ? std::to_string(*s.dim) : std::string("-")) << "\n";
    }
    std::vector<std::string> apex_text;
    for (int a : apexes) apex_text.push_back(std::to_string(a));
    out << "apexes: " << join(apex_text, ",") << "\n";
    out << "counts: " << join(count_text, ",") << "\n";
    return 0;
}

int cmd_counts(const Config& c, std::ostream& out) {
    require(c.format, {Format::Table, Format::Json, Format::Csv}, "counts");
    Family f = family_of(c);
    check_n(c.n);
    if (c.n > diagrams::enumeration_bound(f))
        throw BoundExceeded("counts for " + diagrams::tag(f) + " are limited to n <= " +
                            std::to_string(diagrams::enumeration_bound(f)));
    json rows = json::array();
    bool ok = true;
    for (int l = c.n; l >= 0; --l) {
        arith::Integer lc = sandwich::count_left_cells(f, c.n, l), rc = sandwich::count_right_cells(f, c.n, l);
        auto le = diagrams::bottom_halves(f, c.n, l).size(), re = diagrams::top_halves(f, c.n, l).size();
        bool match = lc == arith::Integer(static_cast<unsigned long>(le)) && rc == arith::Integer(static_cast<unsigned long>(re));
        ok = ok && match;
        rows.push_back({{"lambda", l},
                        {"left_closed", lc.get_str()},
                        {"left_enumerated", le},
                        {"right_closed", rc.get_str()},
                        {"right_enumerated", re},
                        {"match", match}});
    }
    if (c.format == Format::Json) {
        print_json(out, json{{"family", diagrams::tag(f)}, {"n", c.n}, {"rows", rows}, {"match", ok}});
    } else if (c.format == Format::Csv) {
        out << "lambda,left_closed,left_enumerated,right_closed,right_enumerated,match\n";
        for (const auto& r : rows)
            out << r["lambda"] << "," << r["left_closed"].get<std::string>() << "," << r["left_enumerated"] << ","
                << r["right_closed"].get<std::string>() << "," << r["right_enumerated"] << "," << (r["match"].get<bool>() ? "yes" : "no")
                << "\n";
    } else {
        out << diagrams::display_name(f) << " n=" << c.n << "\nlambda  left(closed)  left(enum)  right(closed)  right(enum)\n";
        for (const auto& r : rows)
            out << std::setw(6) << r["lambda"].get<int>() << std::setw(14) << r["left_closed"].get<std::string>()
                << std::setw(12) << r["left_enumerated"].get<std::size_t>() << std::setw(15)
                << r["right_closed"].get<std::string>() << std::setw(13) << r["right_enumerated"].get<std::size_t>()
                << (r["match"].get<bool>() ? "" : "  MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_rsk(const Config& c, std::ostream& out) {
    require(c.format, {Format::Table, Format::Json}, "rsk");
    if (c.words.size() != 1) throw InvalidInput("rsk takes one permutation in one-line notation");
    auto w = symgroup::Permutation::from_one_line(parse_word_digits(c.words[0]));
    auto pq = symgroup::rsk(w);
    if (c.format == Format::Json) {
        print_json(out, json{{"word", w.one_line()},
                             {"P", tableau_json(pq.P)},
                             {"Q", tableau_json(pq.Q)},
                             {"shape", pq.shape().parts}});
        return 0;
    }
    out << "P=" << symgroup::tableau_to_string(pq.P) << " Q=" << symgroup::tableau_to_string(pq.Q) << "\n";
    return 0;
}

int cmd_check(const Config& c, std::ostream& out) {
    require(c.format, {Format::Table, Format::Json}, "check");
    check::SuiteOptions opts;
    opts.seed = c.seed;
    opts.triples = c.triples;
    std::vector<std::string> names = c.suites;
    if (names.empty())
        for (const auto& s : check::suites()) names.push_back(s.name);
    json list = json::array();
    bool ok = true;
    std::size_t passing = 0;
    for (const auto& name : names) {
        auto r = check::run_suite(name, opts);
        ok = ok && r.ok();
        passing += r.ok();
        list.push_back({{"name", r.name}, {"passed", r.passed}, {"failed", r.failed}, {"first_failure", r.first_failure}});
        if (c.format == Format::Table) {
            out << std::left << std::setw(20) << r.name << std::right << std::setw(8) << r.passed << " passed"
                << std::setw(6) << r.failed << " failed" << (r.ok() ? "" : "  " + r.first_failure) << "\n";
            out.flush();
        }
    }
    if (c.format == Format::Json)
        print_json(out, json{{"seed", c.seed}, {"suites", list}, {"ok", ok}});
    else
        out << passing << "/" << names.size() << " suites passed\n";
    return ok ? 0 : 1;
}

}  // namespace greenbox::cli
