#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/hecke_cli.hpp"
#include "hecke/errors.hpp"

using namespace hecke;

namespace {

int emit(const cli::CommandResult& res, const std::string& out) {
  std::string text = res.report.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) {
      std::cerr << "cannot write " << out << "\n";
      return 2;
    }
    f << text;
  }
  if (res.report.contains("first_failure")) std::cerr << "FAIL " << res.report["first_failure"].get<std::string>() << "\n";
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decomposition numbers of cyclotomic Hecke algebras of type G(r,p,n)"};
  app.require_subcommand(1);
  std::string config, out, mode = "both", object, arg;
  int jobs = 1;

  auto* verify = app.add_subcommand("verify", "run the verification suites named in the config");
  auto* decomp = app.add_subcommand("decomp", "decomposition matrices of H_{r,p,n}");
  auto* inspect = app.add_subcommand("inspect", "dump basis, blocks, a Specht module or v_b");
  for (auto* sub : {verify, decomp, inspect}) {
    sub->add_option("--config", config, "session file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "write the JSON report here instead of stdout");
  }
  verify->add_option("--jobs", jobs, "suites run concurrently")->check(CLI::PositiveNumber);
  decomp->add_option("--mode", mode, "direct, reduced or both")->check(CLI::IsMember({"direct", "reduced", "both"}));
  inspect->add_option("object", object, "basis, blocks, specht or vb")->required();
  inspect->add_option("arg", arg, "multipartition for specht, composition for vb");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cli::SessionConfig cfg = cli::load_config(config);
    if (out.empty()) out = cfg.out;
    if (verify->parsed()) return emit(cli::cmd_verify(cfg, jobs), out);
    if (decomp->parsed()) return emit(cli::cmd_decomp(cfg, mode), out);
    return emit(cli::cmd_inspect(cfg, object, arg), out);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::UnknownObject || e.code() == ErrorCode::InvalidParams ||
                   e.code() == ErrorCode::ParseError
               ? 2
               : 1;
  }
}
