#pragma once

#include "ncgb/engine.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ncgb {

struct JobOptions {
  bool reduce = false;
  bool tail_reduce = false;
  bool stats = false;
  std::optional<std::size_t> monomials_upto;
  std::optional<std::string> equivalence_target;  // path to a file of polynomials
};

struct Job {
  Ring ring;
  std::size_t bound = 0;
  std::vector<Polynomial> generators;
  JobOptions options;
};

/// Parse a job description:
///
///     ring Z <x,y> deglex(x>y) bound 3;
///     ideal 2*x, 3*y;
///     option reduce;
///
/// Throws InputError with line and column on malformed input.
Job parse_job(std::string_view text);

/// Parse one polynomial expression over `ring`.
Polynomial parse_polynomial(const Ring& ring, std::string_view text);

/// Parse a list of polynomials separated by commas, semicolons or newlines.
std::vector<Polynomial> parse_polynomial_list(const Ring& ring, std::string_view text);

enum class OutputFormat { Text, Json };

struct RunOutput {
  int exit_code = 0;
  std::string out;  // stdout
  std::string err;  // stderr
};

/// Compute, render and classify errors: 0 success, 1 input error,
/// 2 unsupported feature.
RunOutput run(const Job& job, OutputFormat format = OutputFormat::Text);

/// Parse and run in one step; parse errors map to exit code 1.
RunOutput run_text(std::string_view text, const JobOptions& overrides, OutputFormat format);

/// Output order: ascending leading word, then rendered text.
void sort_basis(const Ring& ring, std::vector<Polynomial>& basis);

}  // namespace ncgb
