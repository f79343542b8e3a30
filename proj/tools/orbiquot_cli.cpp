#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "orbiquot.h"

namespace {

int read_matrix_text(const std::string& inline_text,
                     const std::string& matrix_file, std::string& out) {
  if (!inline_text.empty() && !matrix_file.empty()) {
    std::cerr << "give either an inline matrix or --matrix-file, not both\n";
    return OQ_EUSAGE;
  }
  if (!matrix_file.empty()) {
    std::ifstream in(matrix_file);
    if (!in) {
      std::cerr << "cannot read " << matrix_file << "\n";
      return OQ_EUSAGE;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return OQ_OK;
  }
  if (inline_text.empty()) {
    std::cerr << "missing matrix (inline argument or --matrix-file)\n";
    return OQ_EUSAGE;
  }
  out = inline_text;
  return OQ_OK;
}

int finish(int status, char* out, char* err) {
  if (out) {
    std::fputs(out, stdout);
    oq_string_free(out);
  }
  if (err) {
    std::cerr << "error: " << err << "\n";
    oq_string_free(err);
  }
  switch (status) {
    case OQ_OK:
      return 0;
    case OQ_FAIL:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight-matrix admissibility, zero-set certification and "
               "singular-locus catalogs for torus quotient constructions"};
  app.require_subcommand(1);

  oq_options opts = oq_default_options();
  std::string format = "text";
  std::string matrix_file;
  std::string matrix_text;

  app.add_option("--tol", opts.tol, "solver tolerance");
  app.add_option("--seeds", opts.seeds, "number of seeded solver runs");
  app.add_option("--max-iter", opts.max_iter, "solver iteration cap");
  app.add_option("--seed", opts.seed, "base random seed");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--matrix-file", matrix_file, "read the matrix from a file");

  CLI::App* check = app.add_subcommand("check", "admissibility and freeness");
  CLI::App* catalog = app.add_subcommand("catalog", "singular-locus catalog");
  CLI::App* sample = app.add_subcommand("sample", "seeded zero-set solves");
  CLI::App* verify = app.add_subcommand("verify", "identity and obstruction suites");
  for (CLI::App* sub : {check, catalog, sample, verify})
    sub->fallthrough();  // global flags may follow the subcommand
  for (CLI::App* sub : {check, catalog, sample})
    sub->add_option("matrix", matrix_text,
                    "matrix rows, e.g. \"1 0 1 1; 0 1 1 1; 1 1 0 1\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  opts.json = (format == "json") ? 1 : 0;

  char* out = nullptr;
  char* err = nullptr;

  if (verify->parsed()) {
    const int status = oq_run_verify(&opts, &out, &err);
    return finish(status, out, err);
  }

  std::string text;
  const int rd = read_matrix_text(matrix_text, matrix_file, text);
  if (rd != OQ_OK) return 2;

  oq_matrix* m = nullptr;
  const int pst = oq_matrix_parse(text.c_str(), &m, &err);
  if (pst != OQ_OK) return finish(pst, nullptr, err);

  int status = OQ_EUSAGE;
  if (check->parsed())
    status = oq_run_check(m, &opts, &out, &err);
  else if (catalog->parsed())
    status = oq_run_catalog(m, &opts, &out, &err);
  else if (sample->parsed())
    status = oq_run_sample(m, &opts, &out, &err);
  oq_matrix_free(m);
  return finish(status, out, err);
}
