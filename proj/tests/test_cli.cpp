// Copyright dsfft contributors.
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0
//
// End-to-end checks of the command-line tool. DSFFT_CLI_PATH is injected by
// the build and points at the freshly built binary.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <doctest.h>
#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved

  bool contains(const std::string& needle) const {
    return output.find(needle) != std::string::npos;
  }
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(DSFFT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "dsfft_cli_tests" / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  REQUIRE(out.good());
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& text) {
  std::size_t count = 0;
  for (char c : text)
    if (c == '\n') ++count;
  return count;
}

}  // namespace

TEST_CASE("cli slice decomposes the canonical example") {
  const CliResult r = run_cli("slice -w 8 -f 7 -p 4 -b 2 -a 1 --value=-0.65625");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("raw -84"));
  CHECK(r.contains("block[0] = 12"));
  CHECK(r.contains("block[1] = -6"));
  CHECK(r.contains("roundtrip: exact"));
}

TEST_CASE("cli slice sweeps both algorithms without mismatches") {
  const CliResult a1 = run_cli("slice -w 8 -f 7 -p 4 -b 2 -a 1 --sweep");
  CHECK(a1.exit_code == 0);
  CHECK(a1.contains("256 words, 0 reconstruction mismatches"));

  const CliResult a2 = run_cli("slice -w 9 -f 8 -p 4 -b 3 -a 2 --sweep");
  CHECK(a2.exit_code == 0);
  CHECK(a2.contains("512 words, 0 reconstruction mismatches"));
}

TEST_CASE("cli slice reports usage errors with exit code 2") {
  const CliResult missing = run_cli("slice -w 8 -f 7 -p 4 -b 2");
  CHECK(missing.exit_code == 2);
  CHECK(missing.contains("error"));

  const CliResult mismatch = run_cli("slice -w 12 -f 11 -p 4 -b 2 --value=0.5");
  CHECK(mismatch.exit_code == 2);

  const CliResult badalg = run_cli("slice -w 8 -f 7 -p 4 -b 2 -a 3 --value=0.5");
  CHECK(badalg.exit_code == 2);
}

TEST_CASE("cli fft transforms an impulse bit-exactly") {
  const fs::path dir = fresh_dir("fft_impulse");
  write_file(dir / "in.csv", "0.5,0\n0,0\n0,0\n0,0\n0,0\n0,0\n0,0\n0,0\n");

  const CliResult r = run_cli("fft --input " + (dir / "in.csv").string() + " --output " +
                              (dir / "out.hex").string() + " -n 8");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("wrote"));
  // 0.5 spread over three halving stages: raw 2048 = 0x0800 in every bin.
  const std::string out = read_file(dir / "out.hex");
  std::istringstream in(out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(line == "0800 0000");
    ++rows;
  }
  CHECK(rows == 8);
}

TEST_CASE("cli fft writes csv spectra that parse as reals") {
  const fs::path dir = fresh_dir("fft_csv");
  write_file(dir / "in.csv", "0.5,0\n0,0\n0,0\n0,0\n0,0\n0,0\n0,0\n0,0\n");
  const CliResult r = run_cli("fft --input " + (dir / "in.csv").string() + " --output " +
                              (dir / "out.csv").string() + " -n 8");
  CHECK(r.exit_code == 0);
  std::istringstream in(read_file(dir / "out.csv"));
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    double re = 0, im = 1;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%lf", &re, &im) == 2);
    CHECK(re == 0.0625);
    CHECK(im == 0.0);
    ++rows;
  }
  CHECK(rows == 8);
}

TEST_CASE("cli fft compare reports matching implementations") {
  const fs::path dir = fresh_dir("fft_compare");
  std::ostringstream sig;
  for (int i = 0; i < 16; ++i) sig << (i % 3 == 0 ? "0.25,-0.125\n" : "-0.0625,0.5\n");
  write_file(dir / "in.csv", sig.str());

  const CliResult r =
      run_cli("fft --input " + (dir / "in.csv").string() + " -n 16 --compare");
  CHECK(r.exit_code == 0);
  CHECK(r.contains("implementations: MATCH"));
  CHECK(r.contains("max abs error vs reference:"));
  CHECK(r.contains("snr:"));

  const CliResult conv = run_cli("fft --input " + (dir / "in.csv").string() +
                                 " -n 16 --compare --impl conv --rounding nearest");
  CHECK(conv.exit_code == 0);
  CHECK(conv.contains("implementations: MATCH"));
}

TEST_CASE("cli fft rejects length mismatches and unknown formats") {
  const fs::path dir = fresh_dir("fft_errors");
  write_file(dir / "in.csv", "0.5,0\n0,0\n");
  const CliResult wrong_n =
      run_cli("fft --input " + (dir / "in.csv").string() + " -n 16 --compare");
  CHECK(wrong_n.exit_code == 2);
  CHECK(wrong_n.contains("error"));

  write_file(dir / "in.dat", "0.5,0\n0,0\n");
  const CliResult bad_ext =
      run_cli("fft --input " + (dir / "in.dat").string() + " -n 2 --compare");
  CHECK(bad_ext.exit_code == 2);

  const CliResult no_action = run_cli("fft --input " + (dir / "in.csv").string() + " -n 2");
  CHECK(no_action.exit_code == 2);
}

TEST_CASE("cli hdlgen emits a deterministic scml bundle") {
  const fs::path d1 = fresh_dir("hdl_scml_1");
  const fs::path d2 = fresh_dir("hdl_scml_2");
  const std::string flags =
      " --kind scml --constant=0.707106781 -w 16 -f 15 -p 4 -b 4 --module my_mul"
      " --vectors 16 --seed 7 --table-dump --outdir ";
  const CliResult r1 = run_cli("hdlgen" + flags + d1.string());
  const CliResult r2 = run_cli("hdlgen" + flags + d2.string());
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);

  const std::vector<std::string> names{"my_mul.v",        "my_mul_rom0.hex",
                                       "my_mul_rom1.hex", "my_mul_rom2.hex",
                                       "my_mul_rom3.hex", "my_mul_tb.v",
                                       "my_mul_golden.hex", "my_mul_table.txt"};
  for (const std::string& name : names) {
    CAPTURE(name);
    REQUIRE(fs::exists(d1 / name));
    CHECK(r1.contains(name));
    CHECK(read_file(d1 / name) == read_file(d2 / name));
  }
  CHECK(line_count(read_file(d1 / "my_mul_golden.hex")) == 16);
  CHECK(read_file(d1 / "my_mul.v").find("module my_mul (") != std::string::npos);
}

TEST_CASE("cli hdlgen scml of constant zero has all-zero ROMs") {
  const fs::path dir = fresh_dir("hdl_zero");
  const CliResult r = run_cli(
      "hdlgen --kind scml --constant=0 -w 16 -f 15 -p 4 -b 4 --module zmul --vectors 0"
      " --outdir " + dir.string());
  CHECK(r.exit_code == 0);
  for (int k = 0; k < 4; ++k) {
    std::istringstream in(read_file(dir / ("zmul_rom" + std::to_string(k) + ".hex")));
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
      CHECK(line == "00000");
      ++rows;
    }
    CHECK(rows == 16);
  }
  CHECK(!fs::exists(dir / "zmul_tb.v"));  // --vectors 0 skips the bench
}

TEST_CASE("cli hdlgen emits a butterfly bundle from a plan twiddle") {
  const fs::path dir = fresh_dir("hdl_bfly");
  const CliResult r = run_cli(
      "hdlgen --kind butterfly -n 64 --twiddle-index 5 --module bf --vectors 12 --seed 3"
      " --outdir " + dir.string());
  CHECK(r.exit_code == 0);
  REQUIRE(fs::exists(dir / "bf.v"));
  for (int k = 0; k < 4; ++k) {
    CHECK(fs::exists(dir / ("bf_wr_rom" + std::to_string(k) + ".hex")));
    CHECK(fs::exists(dir / ("bf_wi_rom" + std::to_string(k) + ".hex")));
  }
  REQUIRE(fs::exists(dir / "bf_golden.hex"));
  CHECK(line_count(read_file(dir / "bf_golden.hex")) == 12);
  CHECK(read_file(dir / "bf.v").find("LATENCY = 5") != std::string::npos);

  const CliResult bad = run_cli(
      "hdlgen --kind butterfly -n 16 --twiddle-index 99 --outdir " + dir.string());
  CHECK(bad.exit_code == 2);
}

TEST_CASE("cli cost prints the report as json") {
  const CliResult ds = run_cli("cost --design digit_slicing -w 16 -f 15 -p 4 -b 4 -n 1");
  CHECK(ds.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(ds.output);
  CHECK(j.at("design") == "digit_slicing");
  CHECK(j.at("rom_bits") == 2560);
  CHECK(j.at("multiplier_count") == 0);
  CHECK(j.at("pipeline_depth") == 5);

  const CliResult conv = run_cli("cost --design conventional -w 16 -f 15 -p 4 -b 4 -n 1");
  CHECK(conv.exit_code == 0);
  const nlohmann::json jc = nlohmann::json::parse(conv.output);
  CHECK(jc.at("rom_bits") == 0);
  CHECK(jc.at("multiplier_count") == 4);

  CHECK(run_cli("cost --design bogus").exit_code == 2);
}

TEST_CASE("cli config files supply defaults that flags override") {
  const fs::path dir = fresh_dir("config");
  write_file(dir / "cfg.json",
             "{\"width\": 8, \"frac\": 7, \"p\": 4, \"b\": 2, \"value\": -0.65625}");

  const CliResult from_cfg = run_cli("slice --config " + (dir / "cfg.json").string());
  CHECK(from_cfg.exit_code == 0);
  CHECK(from_cfg.contains("block[1] = -6"));

  const CliResult overridden =
      run_cli("slice --config " + (dir / "cfg.json").string() + " --value=0.25");
  CHECK(overridden.exit_code == 0);
  CHECK(overridden.contains("raw 32"));
  CHECK(overridden.contains("block[1] = 2"));

  write_file(dir / "cost.json", "{\"pairs\": 3, \"width\": 16, \"frac\": 15}");
  const CliResult cost_cfg = run_cli("cost --config " + (dir / "cost.json").string());
  CHECK(cost_cfg.exit_code == 0);
  CHECK(nlohmann::json::parse(cost_cfg.output).at("rom_bits") == 3 * 2560);
  const CliResult cost_override =
      run_cli("cost --config " + (dir / "cost.json").string() + " -n 1");
  CHECK(nlohmann::json::parse(cost_override.output).at("rom_bits") == 2560);

  write_file(dir / "broken.json", "{not json");
  CHECK(run_cli("slice --config " + (dir / "broken.json").string() + " --sweep").exit_code ==
        2);
}

TEST_CASE("cli top level handles help and bad invocations") {
  const CliResult help = run_cli("--help");
  CHECK(help.exit_code == 0);
  CHECK(help.contains("slice"));
  CHECK(help.contains("hdlgen"));

  CHECK(run_cli("").exit_code == 2);          // a subcommand is required
  CHECK(run_cli("nonsense").exit_code == 2);  // unknown subcommand
  CHECK(run_cli("slice --nope").exit_code == 2);
}
