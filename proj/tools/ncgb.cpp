// Command-line front end: reads a job file (or stdin) and prints the basis.
#include "ncgb/job.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  CLI::App app{"Strong two-sided Groebner bases in free algebras over Z, Q and Z/mZ"};
  std::string input = "-";
  std::string output = "text";
  std::size_t monomials = 0;
  std::string equiv;
  ncgb::JobOptions flags;
  app.add_option("input", input, "Job file, '-' for stdin");
  app.add_flag("--stats", flags.stats, "Print pair statistics");
  app.add_flag("--reduce", flags.reduce, "Drop redundant basis elements");
  app.add_flag("--tail-reduce", flags.tail_reduce, "Tail-reduce the basis (implies --reduce)");
  app.add_option("--monomials", monomials, "Print the normal words up to this length");
  app.add_option("--equiv", equiv, "Compare against the ideal of the polynomials in FILE");
  app.add_option("--output", output, "Output format")->check(CLI::IsMember({"text", "json"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }
  if (app.count("--monomials")) flags.monomials_upto = monomials;
  if (!equiv.empty()) flags.equivalence_target = equiv;

  std::stringstream text;
  if (input == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(input);
    if (!in) {
      std::cerr << "error: cannot read " << input << '\n';
      return 1;
    }
    text << in.rdbuf();
  }
  auto format = output == "json" ? ncgb::OutputFormat::Json : ncgb::OutputFormat::Text;
  ncgb::RunOutput r = ncgb::run_text(text.str(), flags, format);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
