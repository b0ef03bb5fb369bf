// Copyright 2026 The qpfree Authors.
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

#include "cli.hpp"

#include <filesystem>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qpfree/error.hpp"
#include "qpfree/graev.hpp"
#include "qpfree/io.hpp"
#include "qpfree/qpspace.hpp"
#include "qpfree/quniform.hpp"
#include "qpfree/schemes.hpp"
#include "qpfree/words.hpp"

namespace qpfree::cli {
namespace {

struct Options {
  std::string space_file;
  std::string word;
  std::string from;
  std::string to;
  std::string eps;
  bool abelian = false;
  bool witness = false;
  bool cap_space = false;
  std::optional<int> cap;
  int n = 0;
  std::string chain_file;
  std::string seq_file;
  std::string topology_file;
  int k = 0;
  std::vector<int> ks;
  std::optional<int> seq_n;
  std::optional<int> kmax;
  bool require_bounded = false;
};

QPSpace load_space(const Options& o) {
  QPSpace space = read_space(o.space_file).space;
  return o.cap_space ? cap_at_one(space) : space;
}

SearchCaps caps_from(const Options& o) {
  SearchCaps caps;
  if (o.cap) {
    if (*o.cap < 1) throw DomainError("--cap must be positive");
    caps.free_length = *o.cap;
    caps.abelian_letters = *o.cap;
  }
  return caps;
}

void print_norm(const QPSpace& space, const Options& o, const std::string& text,
                std::ostream& out) {
  const Alphabet& points = space.points();
  if (o.abelian) {
    const AbelianNorm n = abelian_norm(space, parse_abelian(text, points), caps_from(o));
    out << n.value << "\n";
    if (o.witness) out << format_witness(n.witness, points) << "\n";
  } else {
    const FreeNorm n = graev_norm_free(space, parse_word(text, points), caps_from(o));
    out << n.value << "\n";
    if (o.witness) out << format_witness(n.witness, points) << "\n";
  }
}

int cmd_validate(const Options& o, std::ostream& out) {
  const SpaceFile file = read_space(o.space_file);
  const bool bounded = o.require_bounded || file.bounded_by_one.value_or(false);
  const ValidationReport report = validate(file.space, bounded);
  if (report.ok()) {
    out << "ok\n";
    return kExitOk;
  }
  for (const auto& line : report.describe(file.space)) out << line << "\n";
  return kExitError;
}

int cmd_norm(const Options& o, std::ostream& out) {
  print_norm(load_space(o), o, o.word, out);
  return kExitOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
  const QPSpace space = load_space(o);
  const Alphabet& points = space.points();
  if (o.abelian) {
    const AbelianWord diff = parse_abelian(o.to, points) - parse_abelian(o.from, points);
    const AbelianNorm n = abelian_norm(space, diff, caps_from(o));
    out << n.value << "\n";
    if (o.witness) out << format_witness(n.witness, points) << "\n";
  } else {
    const Word diff =
        reduce(word_product(word_inverse(parse_word(o.from, points)), parse_word(o.to, points)));
    const FreeNorm n = graev_norm_free(space, diff, caps_from(o));
    out << n.value << "\n";
    if (o.witness) out << format_witness(n.witness, points) << "\n";
  }
  return kExitOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  const Rational eps = Rational::parse(o.eps);
  if (!(eps > Rational(0))) throw DomainError("--eps must be positive");
  const QPSpace space = load_space(o);
  const Alphabet& points = space.points();
  if (o.abelian) {
    const AbelianNorm n = abelian_norm(space, parse_abelian(o.word, points), caps_from(o));
    out << (n.value < eps ? "true" : "false") << "\n";
    if (o.witness) out << format_witness(n.witness, points) << "\n";
  } else {
    const FreeNorm n = graev_norm_free(space, parse_word(o.word, points), caps_from(o));
    out << (n.value < eps ? "true" : "false") << "\n";
    if (o.witness) out << format_witness(n.witness, points) << "\n";
  }
  return kExitOk;
}

int cmd_schemes(const Options& o, std::ostream& out) {
  const auto all = enumerate_schemes(o.n, o.cap.value_or(kDefaultSchemeCap));
  for (const auto& s : all) out << s.str() << "\n";
  out << "count: " << all.size() << "\n";
  return kExitOk;
}

int cmd_frink(const Options& o, std::ostream& out) {
  out << format_space(frink_qpm(read_sequence(o.chain_file)));
  return kExitOk;
}

int cmd_lemma5(const Options& o, std::ostream& out) {
  out << (lemma5_check(read_sequence(o.chain_file), o.k, o.ks) ? "true" : "false") << "\n";
  return kExitOk;
}

int cmd_ubase(const Options& o, std::ostream& out) {
  out << format_entourage(universal_base(read_topology(o.topology_file)));
  return kExitOk;
}

std::string format_pairs(const std::vector<SequencePair>& pairs, const Alphabet& points) {
  std::string s;
  for (const auto& p : pairs) {
    s += "U" + std::to_string(p.position) + ":(" + points.symbol(p.x) + "," +
         points.symbol(p.y) + ")";
  }
  return s.empty() ? "-" : s;
}

int cmd_wmember(const Options& o, std::ostream& out) {
  const EntourageSequence seq = read_sequence(o.seq_file);
  const AbelianWord g = parse_abelian(o.word, seq.points());
  if (o.seq_n) {
    const WnResult r = wn_member(g, seq, *o.seq_n);
    out << (r.member ? "true" : "false") << "\n";
    if (r.member) out << "pairs=" << format_pairs(r.witness, seq.points()) << "\n";
    return kExitOk;
  }
  const int k_max = o.kmax.value_or(static_cast<int>(seq.length()));
  const WpResult r = wp_member(g, seq, k_max);
  if (r.status == WpResult::Status::kMember) {
    out << "member\n" << "pairs=" << format_pairs(r.witness, seq.points()) << "\n";
  } else {
    out << "not-found-within-bound\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Graev-type extensions of finite quasi-pseudometrics", "qpfree"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd = app.add_subcommand("validate", "Check the quasi-pseudometric axioms");
  validate_cmd->add_option("--space", o.space_file, "Space file")->required();
  validate_cmd->add_flag("--bounded", o.require_bounded, "Also require d <= 1");

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--space", o.space_file, "Space file")->required();
    cmd->add_flag("--abelian", o.abelian, "Work in the free abelian group");
    cmd->add_flag("--witness", o.witness, "Print the minimizing witness");
    cmd->add_option("--cap", o.cap, "Override the search cap");
    cmd->add_flag("--cap-space", o.cap_space, "Replace d by min(d, 1) before computing");
  };
  auto* norm_cmd = app.add_subcommand("norm", "Norm of a group element");
  add_common(norm_cmd);
  norm_cmd->add_option("--word", o.word, "Element")->required();

  auto* dist_cmd = app.add_subcommand("dist", "Extended distance between two elements");
  add_common(dist_cmd);
  dist_cmd->add_option("--from", o.from, "First element")->required();
  dist_cmd->add_option("--to", o.to, "Second element")->required();

  auto* member_cmd = app.add_subcommand("member", "Is the norm below eps?");
  add_common(member_cmd);
  member_cmd->add_option("--word", o.word, "Element")->required();
  member_cmd->add_option("--eps", o.eps, "Positive rational")->required();

  auto* schemes_cmd = app.add_subcommand("schemes", "List all schemes on 2n points");
  schemes_cmd->add_option("--n", o.n, "Number of pairs")->required();
  schemes_cmd->add_option("--cap", o.cap, "Largest n allowed");

  auto* frink_cmd = app.add_subcommand("frink", "Quasi-pseudometric of an entourage chain");
  frink_cmd->add_option("--chain", o.chain_file, "Sequence file")->required();

  auto* lemma5_cmd = app.add_subcommand("lemma5", "Test U_{k1} o ... o U_{kp} within U_k");
  lemma5_cmd->add_option("--chain", o.chain_file, "Sequence file")->required();
  lemma5_cmd->add_option("--k", o.k, "Target index")->required();
  lemma5_cmd->add_option("--ks", o.ks, "Comma-separated indices")->required()->delimiter(',');

  auto* ubase_cmd = app.add_subcommand("ubase", "Universal base entourage of a finite T0 space");
  ubase_cmd->add_option("--topology", o.topology_file, "Topology file")->required();

  auto* wmember_cmd = app.add_subcommand("wmember", "Membership in W(P) or W_n(P)");
  wmember_cmd->add_option("--word", o.word, "Abelian element")->required();
  wmember_cmd->add_option("--seq", o.seq_file, "Sequence file")->required();
  auto* n_opt = wmember_cmd->add_option("--n", o.seq_n, "Test W_n(P)");
  wmember_cmd->add_option("--kmax", o.kmax, "Largest k tried for W(P)")->excludes(n_opt);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, out);
    if (*norm_cmd) return cmd_norm(o, out);
    if (*dist_cmd) return cmd_dist(o, out);
    if (*member_cmd) return cmd_member(o, out);
    if (*schemes_cmd) return cmd_schemes(o, out);
    if (*frink_cmd) return cmd_frink(o, out);
    if (*lemma5_cmd) return cmd_lemma5(o, out);
    if (*ubase_cmd) return cmd_ubase(o, out);
    if (*wmember_cmd) return cmd_wmember(o, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << app.help();
  return kExitError;
}

}  // namespace qpfree::cli
