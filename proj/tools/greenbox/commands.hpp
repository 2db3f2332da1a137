#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace greenbox::cli {

enum class Format { Table, Json, Dot, Csv };

Format parse_format(const std::string& text);

struct Config {
    std::string family;
    int n = 0;
    int lambda = -1;  // -1: all
    std::string delta = "generic";
    std::string v = "generic";
    int p = 0;  // 0: characteristic zero
    Format format = Format::Table;
    bool count_only = false;
    std::uint64_t seed = 20260101;
    std::size_t triples = 1000;
    std::vector<std::string> suites;
    std::vector<std::string> words;
};

// Each command writes to out and returns the exit code; library errors
// propagate to the caller.
int cmd_enumerate(const Config& c, std::ostream& out);
int cmd_cells(const Config& c, std::ostream& out);
int cmd_eggbox(const Config& c, std::ostream& out);
int cmd_gram(const Config& c, std::ostream& out);
int cmd_simples(const Config& c, std::ostream& out);
int cmd_counts(const Config& c, std::ostream& out);
int cmd_rsk(const Config& c, std::ostream& out);
int cmd_check(const Config& c, std::ostream& out);

int cmd_dihedral_mult(const Config& c, std::ostream& out);
int cmd_dihedral_cells(const Config& c, std::ostream& out);
int cmd_dihedral_simples(const Config& c, std::ostream& out);
int cmd_dihedral_ranks(const Config& c, std::ostream& out);

}  // namespace greenbox::cli
