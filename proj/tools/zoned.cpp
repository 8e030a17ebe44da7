/*
 Copyright 2026 The zoned Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zoned/zoned.h"

namespace {

struct IoError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const void* data, std::size_t size) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError{"cannot write " + path};
  out.write(static_cast<const char*>(data), static_cast<std::streamsize>(size));
  if (!out) throw IoError{"cannot write " + path};
}

/// Writes to path, or to stdout when path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty())
    std::cout << text << std::flush;
  else
    write_file(path, text.data(), text.size());
}

struct CString {
  char* p = nullptr;
  ~CString() { zd_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct Space {
  zd_space* p = nullptr;
  ~Space() { zd_space_free(p); }
};

struct Tuple {
  zd_tuple* p = nullptr;
  ~Tuple() { zd_tuple_free(p); }
};

struct Result {
  zd_result* p = nullptr;
  ~Result() { zd_result_free(p); }
};

struct Failure {
  zd_status status;
};

zd_status check(zd_status s, const std::string& context) {
  if (s != ZD_OK && s != ZD_VERIFY_FAILED && s != ZD_NOT_CONVERGED) {
    std::cerr << "zoned: " << context << ": " << zd_last_error() << "\n";
    throw Failure{s};
  }
  return s;
}

void load_space(const std::string& path, std::optional<double> epsilon, Space& space) {
  check(zd_space_from_json(read_file(path).c_str(), &space.p), path);
  if (epsilon) check(zd_space_set_epsilon(space.p, *epsilon), "--epsilon");
}

void load_sites(const std::string& path, const Space& space, Tuple& sites) {
  check(zd_sites_from_json(space.p, read_file(path).c_str(), &sites.p), path);
}

struct CommonArgs {
  std::string space;
  std::string sites;
  std::optional<double> epsilon;
  std::string out;
};

void add_common(CLI::App* cmd, CommonArgs& a) {
  cmd->add_option("--space", a.space, "space JSON file")->required();
  cmd->add_option("--sites", a.sites, "sites JSON file")->required();
  cmd->add_option("--epsilon", a.epsilon, "dominance tolerance (float spaces)");
  cmd->add_option("--out", a.out, "output file (default: stdout)");
}

struct ComputeArgs {
  CommonArgs common;
  std::string mode = "double";
  std::string direction = "ascending";
  std::string variant = "R";
  std::string double_zone;
  std::string policy = "sweep";
  std::string tie_break = "lowest";
  std::uint64_t seed = 0;
  std::size_t max_moves = 0;
  std::string transcript;
};

int run_compute(const ComputeArgs& a) {
  Space space;
  Tuple sites;
  load_space(a.common.space, a.common.epsilon, space);
  load_sites(a.common.sites, space, sites);
  Result result;
  zd_status status = ZD_OK;
  if (a.mode == "double") {
    const auto dir = a.direction == "descending" ? ZD_DESCENDING : ZD_ASCENDING;
    status = check(zd_compute_double(space.p, sites.p, dir, &result.p), "compute");
  } else if (a.mode == "order2") {
    const zd_variant v = a.variant == "S"   ? ZD_VARIANT_S
                         : a.variant == "Z" ? ZD_VARIANT_Z
                         : a.variant == "W" ? ZD_VARIANT_W
                                            : ZD_VARIANT_R;
    status = check(zd_compute_order2(space.p, sites.p, v, &result.p), "compute");
  } else if (a.mode == "from-double") {
    if (a.double_zone.empty()) {
      std::cerr << "zoned: --mode from-double needs --double\n";
      return ZD_PARSE_ERROR;
    }
    Tuple dz;
    check(zd_regions_from_json(space.p, read_file(a.double_zone).c_str(), &dz.p), a.double_zone);
    status = check(zd_compute_from_double(space.p, sites.p, dz.p, &result.p), "compute");
  } else {
    zd_game_options opt{};
    opt.random_selection = a.policy == "random";
    opt.random_tie_break = a.tie_break == "random";
    opt.seed = a.seed;
    opt.max_moves = a.max_moves;
    status = check(zd_compute_game(space.p, sites.p, &opt, &result.p), "game");
    if (!a.transcript.empty()) {
      CString log;
      check(zd_result_transcript(result.p, &log.p), "transcript");
      emit(a.transcript, log.str());
    }
    if (status == ZD_NOT_CONVERGED) std::cerr << "zoned: game: " << zd_last_error() << "\n";
  }
  CString json;
  check(zd_result_to_json(result.p, &json.p), "result");
  emit(a.common.out, json.str());
  return status;
}

int run_verify(const CommonArgs& a, const std::string& candidate, const std::string& kind) {
  Space space;
  Tuple sites;
  Tuple cand;
  load_space(a.space, a.epsilon, space);
  load_sites(a.sites, space, sites);
  check(zd_regions_from_json(space.p, read_file(candidate).c_str(), &cand.p), candidate);
  CString report;
  const auto status = check(
      zd_verify(space.p, sites.p, cand.p, kind == "double" ? ZD_KIND_DOUBLE : ZD_KIND_ZONE, &report.p),
      "verify");
  emit(a.out, report.str());
  return status;
}

int run_uniq(const CommonArgs& a, const std::string& effort, std::uint64_t cap) {
  Space space;
  Tuple sites;
  load_space(a.space, a.epsilon, space);
  load_sites(a.sites, space, sites);
  CString report;
  check(zd_uniqueness(space.p, sites.p, effort == "brute-force", cap, &report.p), "uniq");
  emit(a.out, report.str());
  return ZD_OK;
}

int run_render(const std::string& result, const std::string& out) {
  unsigned char* buffer = nullptr;
  std::size_t size = 0;
  check(zd_render_ppm(read_file(result).c_str(), &buffer, &size), result);
  std::unique_ptr<unsigned char, void (*)(unsigned char*)> owned(buffer, zd_buffer_free);
  write_file(out, buffer, size);
  return ZD_OK;
}

int run_fixture(const std::string& name, double param, const std::string& space_out,
                const std::string& sites_out) {
  CString space;
  CString sites;
  check(zd_fixture(name.c_str(), param, &space.p, &sites.p), "fixture");
  emit(space_out, space.str());
  emit(sites_out, sites.str());
  return ZD_OK;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zone diagrams and double zone diagrams over finite m-spaces"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "compute a double zone diagram or a zone diagram");
  add_common(c, compute.common);
  c->add_option("--mode", compute.mode)
      ->check(CLI::IsMember({"double", "order2", "from-double", "game"}));
  c->add_option("--direction", compute.direction)->check(CLI::IsMember({"ascending", "descending"}));
  c->add_option("--variant", compute.variant)->check(CLI::IsMember({"R", "S", "Z", "W"}));
  c->add_option("--double", compute.double_zone, "double zone diagram (from-double mode)");
  c->add_option("--policy", compute.policy)->check(CLI::IsMember({"sweep", "random"}));
  c->add_option("--tie-break", compute.tie_break)->check(CLI::IsMember({"lowest", "random"}));
  c->add_option("--seed", compute.seed);
  c->add_option("--max-moves", compute.max_moves);
  c->add_option("--transcript", compute.transcript, "game move log file");

  CommonArgs verify;
  std::string candidate;
  std::string kind = "zone";
  auto* v = app.add_subcommand("verify", "check a candidate tuple for the fixed-point property");
  add_common(v, verify);
  v->add_option("--candidate", candidate, "regions or result JSON file")->required();
  v->add_option("--kind", kind)->check(CLI::IsMember({"zone", "double"}));

  CommonArgs uniq;
  std::string effort = "bracketing";
  std::uint64_t cap = 0;
  auto* u = app.add_subcommand("uniq", "evaluate the uniqueness conditions");
  add_common(u, uniq);
  u->add_option("--effort", effort)->check(CLI::IsMember({"bracketing", "brute-force"}));
  u->add_option("--cap", cap, "enumeration cap (0: default)");

  std::string result_in;
  std::string image_out;
  auto* r = app.add_subcommand("render", "draw a grid result as a PPM image");
  r->add_option("--result", result_in)->required();
  r->add_option("--out", image_out)->required();

  std::string fixture_name;
  double fixture_param = 0.0;
  std::string space_out;
  std::string sites_out;
  auto* f = app.add_subcommand("fixture", "write a worked example's space and sites");
  f->add_option("--name", fixture_name)->required();
  f->add_option("--param", fixture_param);
  f->add_option("--space-out", space_out)->required();
  f->add_option("--sites-out", sites_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : ZD_PARSE_ERROR;
  }

  if (const char* env = std::getenv("ZONED_THREADS")) {
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') zd_set_max_threads(static_cast<unsigned>(n));
  }

  try {
    if (c->parsed()) return run_compute(compute);
    if (v->parsed()) return run_verify(verify, candidate, kind);
    if (u->parsed()) return run_uniq(uniq, effort, cap);
    if (r->parsed()) return run_render(result_in, image_out);
    if (f->parsed()) return run_fixture(fixture_name, fixture_param, space_out, sites_out);
  } catch (const Failure& e) {
    return e.status;
  } catch (const IoError& e) {
    std::cerr << "zoned: " << e.message << "\n";
    return ZD_IO_ERROR;
  } catch (const std::exception& e) {
    std::cerr << "zoned: " << e.what() << "\n";
    return ZD_INTERNAL;
  }
  return ZD_INTERNAL;
}
