#pragma once

#include "paralie/paralie.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace paralie::cli {

/// Process exit codes. Stable contract.
enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kNotLieAlgebra = 3,
};

enum class Command { Construct, Classify, Exp, Verify, Table };
enum class Format { Text, Json };
enum class Grid { Full, Small };

struct CliConfig {
    Command command = Command::Table;
    ClassId class_id = ClassId::F0;
    double alpha = 0.0;
    double beta = 0.0;
    std::array<double, 3> coords{0.0, 0.0, 0.0};
    std::string input_path = "-";
    std::string output_path = "-";
    double tol = 1e-12;
    Format format = Format::Text;
    bool oracle = false;
    Grid grid = Grid::Full;
};

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

/// Parses args (args[0] is the program name) and dispatches.
int run(const std::vector<std::string>& args, Streams io);

int cmd_construct(const CliConfig& cfg, std::ostream& out);
int cmd_classify(const CliConfig& cfg, Streams io);
int cmd_exp(const CliConfig& cfg, std::ostream& out);
int cmd_verify(const CliConfig& cfg, std::ostream& out);
int cmd_table(const CliConfig& cfg, std::ostream& out);

/// Per-class outcome of the verification grid.
struct ClassGridResult {
    ClassId id = ClassId::F0;
    std::size_t points = 0;
    double max_exp_residual = 0.0;        // closed form vs oracle
    double max_roundtrip_error = 0.0;     // classify(class_algebra) parameter error
    bool roundtrip_pure = true;
};

/// Grid values: Full uses alpha, beta in {-2, -1, 0.5, 1, 2} and
/// a, b, c in {-2, ..., 2}; Small uses {-1, 1} and {-1, 0, 1}.
std::vector<double> parameter_grid(Grid g);
std::vector<double> coordinate_grid(Grid g);

/// Evaluates all seven classes concurrently; results in table order.
std::vector<ClassGridResult> run_verify_grid(Grid g);

}  // namespace paralie::cli
