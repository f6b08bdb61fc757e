// Copyright 2026 The torictrace Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "torictrace/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "torictrace/conegeom.hpp"
#include "torictrace/errors.hpp"
#include "torictrace/hibi.hpp"
#include "torictrace/oracle.hpp"
#include "torictrace/poset.hpp"
#include "torictrace/report.hpp"

namespace torictrace {

namespace {

constexpr std::size_t kListLimit = 1000;

struct FileError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  if (in.bad()) throw FileError("cannot read " + path);
  return s.str();
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (const auto& s : out)
    if (s.empty()) throw InputError("empty entry in \"" + text + "\"");
  return out;
}

int status_code(GorensteinStatus s) {
  switch (s) {
    case GorensteinStatus::Gorenstein:
      return kExitGorenstein;
    case GorensteinStatus::NearlyGorenstein:
      return kExitNearlyGorenstein;
    case GorensteinStatus::PuncturedGorenstein:
      return kExitPunctured;
    case GorensteinStatus::Neither:
      return kExitNeither;
  }
  return kExitNeither;
}

struct HibiArgs {
  std::string path;
  int slices = -1;
  int slice_bound = -1;
  int verify_degree = 6;
  bool verify = false;
  bool json = false;
  bool no_locus = false;
};

int cmd_hibi(const HibiArgs& a, std::ostream& out, std::ostream& err) {
  const Poset p = parse_poset(read_file(a.path));
  HibiClassificationOptions opt;
  opt.slice_bound = a.slice_bound;
  opt.compute_locus = !a.no_locus;
  const HibiClassification c = classify(p, opt);

  std::vector<HibiSliceSummary> slices;
  if (a.slices >= 0) {
    HibiRing ring(p);
    for (int k = 0; k <= a.slices; ++k) {
      HibiSliceSummary s;
      s.degree = k;
      s.ring_count = ring.ring_slice_count(k);
      s.trace_count = ring.trace_slice_count(k);
      if (s.trace_count <= kListLimit) s.trace = ring.trace_slice(k).monomials;
      slices.push_back(std::move(s));
    }
  }

  std::optional<VerifyResult> verify;
  if (a.verify) verify = cross_verify_hibi(p, c, a.verify_degree);

  if (a.json) {
    Json j = hibi_json(p, c, slices);
    if (verify) j["verify"] = verify_json(*verify);
    out << dump_json(j);
  } else {
    out << hibi_text(p, c, slices);
    if (verify) out << verify_text(*verify);
  }
  if (verify && !verify->pass) {
    err << "torictrace: verification failed: " << verify->failure << "\n";
    return kExitInconsistent;
  }
  return status_code(c.status);
}

struct ConeArgs {
  std::string path;
  bool verify = false;
  bool json = false;
};

int cmd_cone(const ConeArgs& a, std::ostream& out, std::ostream& err) {
  const SimplicialCone cone = parse_cone(read_file(a.path));
  const ConeClassification c = classify_cone(cone);
  std::optional<VerifyResult> verify;
  if (a.verify) verify = cross_verify_cone(cone, c);
  if (a.json) {
    Json j = cone_json(cone, c);
    if (verify) j["verify"] = verify_json(*verify);
    out << dump_json(j);
  } else {
    out << cone_text(cone, c);
    if (verify) out << verify_text(*verify);
  }
  if (verify && !verify->pass) {
    err << "torictrace: verification failed: " << verify->failure << "\n";
    return kExitInconsistent;
  }
  if (c.gorenstein) return kExitGorenstein;
  return c.punctured_gorenstein ? kExitPunctured : kExitNeither;
}

struct RayArgs {
  std::string base;
  std::string direction;
  bool json = false;
};

bool same_verdict(const RayIntegralityReport& x, const RayIntegralityReport& y) {
  if (x.has_integral_point != y.has_integral_point) return false;
  if (!x.has_integral_point) return true;
  return *x.t == *y.t && *x.point == *y.point;
}

int cmd_ray(const RayArgs& a, std::ostream& out, std::ostream& err) {
  auto bs = split_csv(a.base);
  auto as = split_csv(a.direction);
  if (bs.size() != as.size())
    throw InputError("base has " + std::to_string(bs.size()) + " entries but direction has " +
                     std::to_string(as.size()));
  RatVector b(bs.size());
  IntVector d(as.size());
  for (std::size_t i = 0; i < bs.size(); ++i) {
    b(i) = parse_rational(bs[i]);
    d(i) = parse_integer(as[i]);
  }
  if (d.isZero()) throw InputError("direction must be nonzero");
  const AffineRay ray = AffineRay::primitivized(b, d);
  const RayIntegralityReport solver = ray_integral_point(ray);
  const RayIntegralityReport oracle = ray_integral_point_oracle(ray);
  const bool agree = same_verdict(solver, oracle);
  if (a.json) {
    Json j;
    j["kind"] = "ray";
    j["base"] = vector_json(ray.base());
    j["direction"] = vector_json(ray.direction());
    j["solver"] = ray_json(solver);
    j["oracle"] = ray_json(oracle);
    j["agree"] = agree;
    out << dump_json(j);
  } else {
    out << "solver: " << ray_text(solver) << "\n";
    out << "oracle: " << ray_text(oracle) << "\n";
  }
  if (!agree) {
    err << "torictrace: the two ray solvers disagree\n";
    return kExitInconsistent;
  }
  return 0;
}

int cmd_construct(int a, int b, bool json, std::ostream& out) {
  const Poset p = construct_height_dim_poset(a, b);
  if (json) {
    Json j;
    j["kind"] = "poset";
    j["elements"] = p.labels();
    Json covers = Json::array();
    for (const auto& c : p.covers()) covers.push_back({p.label(c.lower), p.label(c.upper)});
    j["covers"] = covers;
    out << dump_json(j);
  } else {
    out << format_poset(p);
  }
  return 0;
}

// Negative numbers such as "-8/5,-1" would read as options; everything after
// "ray" other than its flags is passed positionally.
std::vector<std::string> normalize_args(int argc, const char* const* argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto it = std::find(args.begin(), args.end(), std::string("ray"));
  if (it == args.end() || it != args.begin()) return args;
  std::vector<std::string> flags, positional;
  for (auto p = it + 1; p != args.end(); ++p) {
    if (*p == "--json" || *p == "-h" || *p == "--help") flags.push_back(*p);
    else if (*p != "--") positional.push_back(*p);
  }
  std::vector<std::string> out{"ray"};
  out.insert(out.end(), flags.begin(), flags.end());
  out.push_back("--");
  out.insert(out.end(), positional.begin(), positional.end());
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Traces of canonical modules of Hibi rings and simplicial toric rings", "torictrace"};
  app.require_subcommand(1);

  HibiArgs hibi;
  auto* h = app.add_subcommand("hibi", "classify the Hibi ring of a poset file");
  h->add_option("file", hibi.path, "poset file: one relation \"u < v\" per line")->required();
  h->add_option("--slices", hibi.slices, "report trace slices in degrees 0..K");
  h->add_option("--slice-bound", hibi.slice_bound, "check tr(omega) = m^N through this degree");
  h->add_option("--verify-degree", hibi.verify_degree, "degrees recomputed by --verify");
  h->add_flag("--verify", hibi.verify, "recompute the results by enumeration");
  h->add_flag("--json", hibi.json, "JSON output");
  h->add_flag("--no-locus", hibi.no_locus, "skip the face enumeration");

  ConeArgs cone;
  auto* c = app.add_subcommand("cone", "classify the semigroup ring of a simplicial cone");
  c->add_option("file", cone.path, "cone file: \"rays\" or \"normals\", then one row per line")
      ->required();
  c->add_flag("--verify", cone.verify, "recompute the results by enumeration");
  c->add_flag("--json", cone.json, "JSON output");

  RayArgs ray;
  auto* r = app.add_subcommand("ray", "integral points on the ray b + t a");
  r->add_option("b", ray.base, "base point, comma separated rationals")->required();
  r->add_option("a", ray.direction, "direction, comma separated integers")->required();
  r->add_flag("--json", ray.json, "JSON output");

  int ca = 0, cb = 0;
  bool cjson = false;
  auto* k = app.add_subcommand("construct", "poset whose trace has height a in dimension b");
  k->add_option("--a", ca, "height")->required();
  k->add_option("--b", cb, "dimension")->required();
  k->add_flag("--json", cjson, "JSON output");

  std::vector<std::string> args = normalize_args(argc, argv);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "torictrace: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*h) return cmd_hibi(hibi, out, err);
    if (*c) return cmd_cone(cone, out, err);
    if (*r) return cmd_ray(ray, out, err);
    if (*k) return cmd_construct(ca, cb, cjson, out);
  } catch (const FileError& e) {
    err << "torictrace: " << e.what() << "\n";
    return kExitNoInput;
  } catch (const MalformedPosetError& e) {
    std::string cycle;
    for (std::size_t i = 0; i < e.cycle().size(); ++i)
      cycle += (i ? " < " : "") + e.cycle()[i];
    err << "torictrace: " << e.what() << "\n  cycle: " << cycle << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    err << "torictrace: " << e.what() << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "torictrace: " << e.what() << "\n";
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "torictrace: " << e.what() << "\n";
    return kExitResource;
  } catch (const InconsistencyError& e) {
    err << "torictrace: internal inconsistency: " << e.what() << "\n";
    return kExitInconsistent;
  }
  return kExitInput;
}

}  // namespace torictrace
