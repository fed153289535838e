#pragma once

// The line-oriented instance file format and the built-in double generators.
// Tables are explicit: zero ambiguity, trivially producible from other
// systems, and the validator is the single source of truth.

#include "equicat/crossed_module.hpp"

#include <fstream>
#include <sstream>

namespace equicat {

namespace detail {

class TokenReader {
 public:
  explicit TokenReader(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::string tok;
      while (ls >> tok) tokens_.emplace_back(tok, lineno);
    }
  }

  bool done() const { return pos_ >= tokens_.size(); }
  std::string word(const char* what) {
    if (done()) throw parse_error(std::string("unexpected end of file, expected ") + what);
    return tokens_[pos_++].first;
  }
  void expect(const std::string& kw) {
    std::string w = word(kw.c_str());
    if (w != kw)
      throw parse_error("expected '" + kw + "' but found '" + w + "' near line " +
                        std::to_string(line()));
  }
  int integer(const char* what) {
    std::string w = word(what);
    try {
      size_t used = 0;
      int v = std::stoi(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      return v;
    } catch (const std::exception&) {
      throw parse_error(std::string("expected integer for ") + what + " but found '" + w +
                        "' near line " + std::to_string(line()));
    }
  }
  std::vector<int> integers(size_t count, const char* what) {
    std::vector<int> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i) v.push_back(integer(what));
    return v;
  }
  int line() const {
    size_t i = pos_ < tokens_.size() ? pos_ : tokens_.size() - 1;
    return tokens_.empty() ? 0 : tokens_[i].second;
  }

 private:
  std::vector<std::pair<std::string, int>> tokens_;
  size_t pos_ = 0;
};

}  // namespace detail

inline RawInstance parse_instance(const std::string& text) {
  detail::TokenReader r(text);
  RawInstance raw;
  r.expect("scalar_order");
  raw.scalar_order = r.integer("scalar_order");
  if (raw.scalar_order <= 0) throw parse_error("scalar_order must be positive");

  r.expect("group");
  raw.g_name = r.word("group name");
  raw.g_order = r.integer("group order");
  if (raw.g_order <= 0) throw parse_error("group order must be positive");
  raw.g_table = r.integers(static_cast<size_t>(raw.g_order) * raw.g_order, "G Cayley table");

  r.expect("group");
  raw.x_name = r.word("group name");
  raw.x_order = r.integer("group order");
  if (raw.x_order <= 0) throw parse_error("group order must be positive");
  raw.x_table = r.integers(static_cast<size_t>(raw.x_order) * raw.x_order, "X Cayley table");

  r.expect("action");
  raw.act = r.integers(static_cast<size_t>(raw.g_order) * raw.x_order, "action table");
  r.expect("boundary");
  raw.bd = r.integers(raw.x_order, "boundary table");
  r.expect("cocycle");
  r.expect("w");
  raw.w = r.integers(static_cast<size_t>(raw.x_order) * raw.x_order * raw.x_order, "w table");
  r.expect("cocycle");
  r.expect("gam");
  raw.gam = r.integers(static_cast<size_t>(raw.g_order) * raw.g_order * raw.x_order, "gam table");
  r.expect("cocycle");
  r.expect("mu");
  raw.mu = r.integers(static_cast<size_t>(raw.g_order) * raw.x_order * raw.x_order, "mu table");
  r.expect("cocycle");
  r.expect("c");
  raw.c = r.integers(static_cast<size_t>(raw.x_order) * raw.x_order, "c table");
  if (!r.done()) throw parse_error("trailing content near line " + std::to_string(r.line()));

  for (int v : raw.act)
    if (v < 0 || v >= raw.x_order) throw parse_error("action index out of range");
  for (int v : raw.bd)
    if (v < 0 || v >= raw.g_order) throw parse_error("boundary index out of range");
  for (auto* t : {&raw.w, &raw.gam, &raw.mu, &raw.c})
    for (auto& e : *t) e = mod_norm(e, raw.scalar_order);
  return raw;
}

inline std::string serialize_instance(const RawInstance& raw) {
  std::ostringstream os;
  auto rows = [&os](const std::vector<int>& t, size_t width) {
    for (size_t i = 0; i < t.size(); ++i) {
      os << t[i];
      os << ((i % width == width - 1) ? '\n' : ' ');
    }
    if (t.size() % width != 0) os << '\n';
  };
  os << "scalar_order " << raw.scalar_order << "\n";
  os << "group " << raw.g_name << " " << raw.g_order << "\n";
  rows(raw.g_table, raw.g_order);
  os << "group " << raw.x_name << " " << raw.x_order << "\n";
  rows(raw.x_table, raw.x_order);
  os << "action\n";
  rows(raw.act, raw.x_order);
  os << "boundary\n";
  rows(raw.bd, raw.x_order);
  os << "cocycle w\n";
  rows(raw.w, raw.x_order);
  os << "cocycle gam\n";
  rows(raw.gam, raw.x_order);
  os << "cocycle mu\n";
  rows(raw.mu, raw.x_order);
  os << "cocycle c\n";
  rows(raw.c, raw.x_order);
  return os.str();
}

inline RawInstance load_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

// Builtin group specs for gen-double: c1..c12, klein4, s3, d4, q8; anything
// else is treated as a path to a Cayley-table file ("order" then the table).
inline FiniteGroup builtin_group(const std::string& spec, std::string& name_out) {
  name_out = spec;
  if (spec.size() >= 2 && spec[0] == 'c') {
    bool digits = std::all_of(spec.begin() + 1, spec.end(), [](char ch) { return std::isdigit(ch); });
    if (digits) {
      int n = std::stoi(spec.substr(1));
      if (n < 1 || n > 12) throw validation_error("cyclic builtin out of range (c1..c12): " + spec);
      return cyclic_group(n);
    }
  }
  if (spec == "klein4") return klein_four();
  if (spec == "s3") return symmetric3();
  if (spec == "d4") return dihedral4();
  if (spec == "q8") return quaternion8();
  std::ifstream in(spec);
  if (!in) throw validation_error("unknown builtin and not a readable file: " + spec);
  std::ostringstream ss;
  ss << in.rdbuf();
  detail::TokenReader r(ss.str());
  int n = r.integer("group order");
  auto table = r.integers(static_cast<size_t>(n) * n, "Cayley table");
  name_out = "file";
  return validate_group(table, n);
}

inline RawInstance gen_double(const std::string& spec) {
  std::string name;
  FiniteGroup g = builtin_group(spec, name);
  return untwisted_double_raw(g, name);
}

}  // namespace equicat
