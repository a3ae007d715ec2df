#include "prufer/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "prufer/codec_classic.hpp"
#include "prufer/codec_star.hpp"
#include "prufer/enumeration.hpp"
#include "prufer/error.hpp"
#include "prufer/io.hpp"
#include "prufer/permline.hpp"

namespace prufer {

namespace {

struct UnreadableInput {
  std::string path;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UnreadableInput{path};
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

std::string braces(const std::vector<Vertex>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vs[i]);
  }
  return out + "}";
}

std::string compact(const std::vector<Vertex>& sigma) {
  std::string out;
  for (Vertex v : sigma) out += std::to_string(v);
  return out;
}

void cmd_validate(const RootedHypertree& t, std::ostream& out) {
  const auto n = t.vertex_count();
  const auto k = t.edge_count();
  out << "n=" << n << " k=" << k << " leaves=" << braces(leaves(t)) << " OK\n";
  out << "sum(|e|-1) = " << edge_excess(t) << " = n-1\n";
  out << "sum(deg(v)-1) = " << degree_excess(t) << " = k-1\n";
}

PruferCode encode(const RootedHypertree& t, Variant variant) {
  return variant == Variant::Classic ? encode_classic(t) : encode_star_incremental(t);
}

RootedHypertree decode(const PruferCode& code) {
  return code.variant == Variant::Classic ? decode_classic(code) : decode_star(code);
}

std::vector<Vertex> parse_sigma(const std::string& text) {
  std::vector<Vertex> values;
  std::istringstream stream(text);
  std::string token;
  while (stream >> token) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.front() == '-' || v > kInfinity - 1) {
      fail(ErrorKind::ParseError, "permutation entry '" + token + "' is not a positive integer");
    }
    values.push_back(static_cast<Vertex>(v));
  }
  return values;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prüfer codes for rooted hypertrees"};
  app.name("prufer");
  app.require_subcommand(1);

  std::string path = "-";
  std::string codec = "star";
  unsigned n = 0;
  std::optional<unsigned> k;
  bool count_only = false;
  bool cycles = false;
  bool steps = false;
  std::string sigma_text;

  auto* validate = app.add_subcommand("validate", "check a tree file and report n, k and the leaves");
  validate->add_option("path", path, "tree file, - for stdin")->required();

  auto* enc = app.add_subcommand("encode", "print the code file of a tree");
  enc->add_option("path", path, "tree file, - for stdin")->required();
  enc->add_option("--codec", codec, "classic or star")->check(CLI::IsMember({"classic", "star"}));

  auto* dec = app.add_subcommand("decode", "print the tree file of a code file");
  dec->add_option("path", path, "code file, - for stdin")->required();

  auto* enumerate = app.add_subcommand("enumerate", "stream every tree on {1..n} rooted at n");
  enumerate->add_option("--n", n, "number of vertices")->required();
  enumerate->add_option("--k", k, "number of hyperedges");
  enumerate->add_flag("--count-only", count_only, "print only the number of trees");

  auto* count = app.add_subcommand("count", "number of trees from the closed formula");
  count->add_option("--n", n, "number of vertices")->required();
  count->add_option("--k", k, "number of hyperedges");

  auto* orbit_cmd = app.add_subcommand("orbits", "cycles of sigma -> W*(sigma) on S_n");
  orbit_cmd->add_option("--n", n, "degree of the symmetric group")->required();
  orbit_cmd->add_flag("--cycles", cycles, "list each orbit in iteration order");

  auto* perm = app.add_subcommand("perm", "image of one permutation under W*");
  perm->add_option("--sigma", sigma_text, "one-line notation, e.g. \"2 3 1\"")->required();

  auto* dot = app.add_subcommand("dot", "Graphviz rendering of a tree file");
  dot->add_option("path", path, "tree file, - for stdin")->required();
  dot->add_flag("--steps", steps, "one graph per star-reduction stage");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (validate->parsed()) {
      cmd_validate(parse_hypertree(read_input(path, in)), out);
    } else if (enc->parsed()) {
      out << emit_code(encode(parse_hypertree(read_input(path, in)), *parse_variant(codec)));
    } else if (dec->parsed()) {
      out << emit_hypertree(decode(parse_code(read_input(path, in))));
    } else if (enumerate->parsed()) {
      HypertreeEnumerator trees(n, k);
      std::size_t index = 0;
      while (auto t = trees.next()) {
        ++index;
        if (!count_only) out << "# tree " << index << "\n" << emit_hypertree(*t);
      }
      if (count_only) out << index << "\n";
    } else if (count->parsed()) {
      out << (k ? count_hypertrees(n, *k) : total_hypertrees(n)) << "\n";
    } else if (orbit_cmd->parsed()) {
      for (const Orbit& orbit : orbits(n)) {
        const auto& list = cycles ? orbit.cycle : orbit.members;
        std::string line = cycles ? "(" : "{";
        for (std::size_t i = 0; i < list.size(); ++i) {
          if (i) line += cycles ? " " : ",";
          line += compact(list[i]);
        }
        out << line << (cycles ? ")" : "}") << "\n";
      }
    } else if (perm->parsed()) {
      const std::vector<Vertex> values = parse_sigma(sigma_text);
      const auto psi = perm_encode_star(FiniteSupportPermutation::make(values)).padded(values.size());
      std::string line;
      for (Vertex v : psi) line += (line.empty() ? "" : " ") + std::to_string(v);
      out << (line.empty() ? "1" : line) << "\n";
    } else if (dot->parsed()) {
      const RootedHypertree t = parse_hypertree(read_input(path, in));
      out << (steps ? dot_steps(t) : to_dot(t));
    }
  } catch (const UnreadableInput& e) {
    err << "error: cannot read '" << e.path << "'\n";
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError ? kExitUsageError : kExitDomainError;
  }
  return kExitOk;
}

}  // namespace prufer
