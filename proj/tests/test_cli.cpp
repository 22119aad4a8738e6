#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>
#include <unistd.h>

#ifndef QCOH_CLI_PATH
#error "QCOH_CLI_PATH must point at the CLI binary"
#endif

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int exit_code;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("qcoh-cli-test-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

RunResult run_cli(const std::string& args) {
  const fs::path out_file = work_dir() / "stdout.txt";
  const std::string cmd = std::string(QCOH_CLI_PATH) + " " + args + " > " +
                          out_file.string() + " 2> " + (work_dir() / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return {WEXITSTATUS(status), buffer.str()};
}

fs::path write_file(const std::string& name, const std::string& contents) {
  const fs::path p = work_dir() / name;
  std::ofstream out(p, std::ios::binary);
  out << contents;
  return p;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string ad_document(double p) {
  const double s = std::sqrt(1.0 - p);
  json doc;
  doc["name"] = "amplitude damping";
  doc["dim"] = 2;
  doc["kraus"] = {
      {{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {s, 0.0}}},
      {{{0.0, 0.0}, {std::sqrt(p), 0.0}}, {{0.0, 0.0}, {0.0, 0.0}}},
  };
  return doc.dump();
}

std::string identity_document() {
  json doc;
  doc["dim"] = 2;
  doc["kraus"] = {{{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}}};
  return doc.dump();
}

std::string dephasing_document() {
  json doc;
  doc["dim"] = 2;
  doc["kraus"] = {{{{1.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {0.0, 0.0}}},
                  {{{0.0, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}}};
  return doc.dump();
}

std::string hadamard_document() {
  const double h = 1.0 / std::sqrt(2.0);
  json doc;
  doc["dim"] = 2;
  doc["kraus"] = {{{{h, 0.0}, {h, 0.0}}, {{h, 0.0}, {-h, 0.0}}}};
  return doc.dump();
}

std::vector<double> csv_fields(const std::string& line) {
  std::vector<double> fields;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) fields.push_back(std::stod(cell));
  return fields;
}

std::vector<std::string> data_rows(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);  // header
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    if (!line.empty()) rows.push_back(line);
  }
  return rows;
}

}  // namespace

TEST_CASE("report on amplitude damping") {
  const fs::path doc = write_file("ad.json", ad_document(0.5));
  const RunResult r = run_cli("report " + doc.string());
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out["measures_bits"]["qi_rec"].get<double>() ==
        doctest::Approx(0.6887218755408672).epsilon(1e-9));
  CHECK(out["measures_bits"]["rec_output_marginal"].get<double>() ==
        doctest::Approx(0.0).epsilon(1e-9));
  CHECK(out["classification"]["incoherent_kraus"].get<bool>());
  CHECK_FALSE(out["classification"]["unital"].get<bool>());
}

TEST_CASE("report on the identity channel") {
  const fs::path doc = write_file("id.json", identity_document());
  const RunResult r = run_cli("report " + doc.string());
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out["measures_bits"]["qi_rec"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(out["measures_bits"]["rec_choi"].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("parse failures exit with 2") {
  const fs::path bad = write_file("bad.json", "{ not json");
  CHECK(run_cli("report " + bad.string()).exit_code == 2);

  const fs::path missing_field = write_file("nofield.json", R"({"dim": 2})");
  CHECK(run_cli("report " + missing_field.string()).exit_code == 2);

  const fs::path shape = write_file("shape.json", R"({"dim": 2, "kraus": [[[[1,0]]]]})");
  CHECK(run_cli("report " + shape.string()).exit_code == 2);

  CHECK(run_cli("report " + (work_dir() / "does-not-exist.json").string()).exit_code == 2);
}

TEST_CASE("validation failures exit with 3") {
  json doc;
  doc["dim"] = 2;
  doc["kraus"] = {{{{0.5, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {0.5, 0.0}}}};
  const fs::path p = write_file("noncptp.json", doc.dump());
  CHECK(run_cli("report " + p.string()).exit_code == 3);

  const RunResult classify = run_cli("classify " + p.string());
  CHECK(classify.exit_code == 3);
  CHECK_FALSE(json::parse(classify.out)["cptp"].get<bool>());

  // A loose enough tolerance accepts the same file.
  json near;
  near["dim"] = 2;
  near["kraus"] = {{{{1.0 + 1e-6, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {1.0, 0.0}}}};
  const fs::path q = write_file("near.json", near.dump());
  CHECK(run_cli("report " + q.string()).exit_code == 3);
  CHECK(run_cli("--tol 1e-4 report " + q.string()).exit_code == 0);
}

TEST_CASE("classify") {
  const fs::path deph = write_file("deph.json", dephasing_document());
  const RunResult r = run_cli("classify " + deph.string());
  REQUIRE(r.exit_code == 0);
  const json out = json::parse(r.out);
  CHECK(out["cptp"].get<bool>());
  CHECK(out["unital"].get<bool>());
  CHECK(out["incoherent_kraus"].get<bool>());
  CHECK(out["coherence_breaking"].get<bool>());

  const fs::path had = write_file("had.json", hadamard_document());
  const json hout = json::parse(run_cli("classify " + had.string()).out);
  CHECK_FALSE(hout["coherence_breaking"].get<bool>());
  CHECK(hout["unital"].get<bool>());

  const fs::path ad = write_file("ad03.json", ad_document(0.3));
  const json aout = json::parse(run_cli("classify " + ad.string()).out);
  CHECK(aout["incoherent_kraus"].get<bool>());
  CHECK_FALSE(aout["unital"].get<bool>());
  CHECK(aout["affine"]["tau"][2].get<double>() == doctest::Approx(0.3).epsilon(1e-9));
  CHECK(aout["affine"]["singular_values"][2].get<double>() ==
        doctest::Approx(0.7).epsilon(1e-9));
}

TEST_CASE("ad-sweep") {
  const fs::path out = work_dir() / "ad.csv";
  const RunResult r = run_cli("ad-sweep --steps 2 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  const std::string csv = read_file(out);
  CHECK(csv.rfind("p,qi_rec,closed_form,abs_diff\n", 0) == 0);
  CHECK(csv.back() == '\n');
  const auto rows = data_rows(csv);
  REQUIRE(rows.size() == 2);
  const auto first = csv_fields(rows.front());
  CHECK(first[0] == 0.0);
  CHECK(first[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(first[2] == 1.0);
  const auto last = csv_fields(rows.back());
  CHECK(last[0] == 1.0);
  CHECK(last[1] == doctest::Approx(0.0).epsilon(1e-12));

  CHECK(run_cli("ad-sweep --steps 11 --out /nonexistent-dir/x.csv").exit_code == 5);
}

TEST_CASE("ad-sweep endpoints at 101 steps") {
  const fs::path out = work_dir() / "ad101.csv";
  REQUIRE(run_cli("ad-sweep --steps 101 --out " + out.string()).exit_code == 0);
  const auto rows = data_rows(read_file(out));
  REQUIRE(rows.size() == 101);
  CHECK(csv_fields(rows.front())[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(csv_fields(rows.back())[1] == doctest::Approx(0.0).epsilon(1e-9));
  for (const std::string& row : rows) {
    CHECK(csv_fields(row)[3] <= 1e-9);  // qi_rec vs closed form
  }
}

TEST_CASE("phase-cov") {
  const fs::path out = work_dir() / "pc.csv";
  const RunResult weak =
      run_cli("phase-cov --R 0.01 --s 0.5 --tmax 20 --steps 100 --out " + out.string());
  REQUIRE(weak.exit_code == 0);
  CHECK(weak.out.rfind("rising intervals: 0", 0) == 0);
  const std::string csv = read_file(out);
  CHECK(csv.rfind("lambda_t,Gamma,Gamma_z,kappa,eta_par,eta_perp,coherence\n", 0) == 0);
  CHECK(csv.find("\n0,0,0,0,1,1,") != std::string::npos);

  const RunResult strong =
      run_cli("phase-cov --R 10 --s 3.5 --tmax 20 --steps 100 --out " + out.string());
  REQUIRE(strong.exit_code == 0);
  CHECK(strong.out.rfind("rising intervals: 0", 0) != 0);

  const RunResult single =
      run_cli("phase-cov --R 0.01 --s 0.5 --tmax 0 --steps 100 --out " + out.string());
  REQUIRE(single.exit_code == 0);
  const auto rows = data_rows(read_file(out));
  REQUIRE(rows.size() == 1);
  const auto fields = csv_fields(rows.front());
  CHECK(fields[0] == 0.0);
  CHECK(fields[1] == 0.0);
  CHECK(fields[2] == 0.0);
  CHECK(fields[6] == doctest::Approx(1.0).epsilon(1e-12));

  CHECK(run_cli("phase-cov --R 0.01 --s 1 --tmax 20 --steps 10 --out " + out.string())
            .exit_code == 3);
}

TEST_CASE("sweep outputs are byte identical across runs") {
  const fs::path a = work_dir() / "a.csv";
  const fs::path b = work_dir() / "b.csv";
  REQUIRE(run_cli("ad-sweep --steps 101 --out " + a.string()).exit_code == 0);
  REQUIRE(run_cli("ad-sweep --steps 101 --out " + b.string()).exit_code == 0);
  CHECK(read_file(a) == read_file(b));

  REQUIRE(run_cli("phase-cov --R 10 --s 3.5 --tmax 20 --steps 80 --out " + a.string())
              .exit_code == 0);
  REQUIRE(run_cli("phase-cov --R 10 --s 3.5 --tmax 20 --steps 80 --out " + b.string())
              .exit_code == 0);
  CHECK(read_file(a) == read_file(b));
}
