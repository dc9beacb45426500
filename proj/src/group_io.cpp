#include "nilaut/group_io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "nilaut/errors.hpp"
#include "nilaut/kernels.hpp"

namespace nilaut {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

// A piece of input text remembering where it started.
struct Item {
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

class Scanner {
 public:
  explicit Scanner(Item item) : item_(item) {}

  void skip_ws() {
    while (pos_ < item_.text.size() && std::isspace(static_cast<unsigned char>(item_.text[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= item_.text.size();
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < item_.text.size() && item_.text[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::string_view name() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= item_.text.size() || !is_name_start(item_.text[pos_])) fail("expected a generator name");
    while (pos_ < item_.text.size() && is_name_char(item_.text[pos_])) ++pos_;
    return item_.text.substr(start, pos_ - start);
  }
  long integer() {
    skip_ws();
    bool neg = false;
    if (pos_ < item_.text.size() && item_.text[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < item_.text.size() && std::isdigit(static_cast<unsigned char>(item_.text[pos_]))) {
      if (v > 100'000'000) fail("integer too large");
      v = v * 10 + (item_.text[pos_] - '0');
      ++pos_;
    }
    if (start == pos_) fail("expected an integer");
    return neg ? -v : v;
  }
  bool peek_digit() {
    skip_ws();
    return pos_ < item_.text.size() && std::isdigit(static_cast<unsigned char>(item_.text[pos_]));
  }
  std::size_t column() const { return item_.column + pos_; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, item_.line, column()); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t col) const {
    throw ParseError(what, item_.line, col);
  }

 private:
  Item item_;
  std::size_t pos_ = 0;
};

std::size_t lookup(const PcPresentation& pres, Scanner& sc, std::string_view name, std::size_t col) {
  for (std::size_t i = 0; i < pres.size(); ++i)
    if (pres.generators()[i] == name) return i;
  sc.fail_at("unknown generator '" + std::string(name) + "'", col);
}

Word scan_word(const PcPresentation& pres, Scanner& sc) {
  Word w;
  if (sc.peek_digit()) {
    if (sc.integer() != 1) sc.fail("expected '1' for the empty word");
    return w;
  }
  do {
    sc.skip_ws();
    const std::size_t col = sc.column();
    const auto name = sc.name();
    const std::size_t g = lookup(pres, sc, name, col);
    long e = 1;
    if (sc.accept('^')) e = sc.integer();
    if (e != 0) w.push_back({g, e});
  } while (sc.accept('*'));
  return w;
}

// Splits a line (comment removed) into comma/semicolon separated items.
void split_items(std::string_view text, std::size_t line, std::size_t col0, std::vector<Item>& out) {
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',' || text[i] == ';') {
      auto piece = text.substr(start, i - start);
      std::size_t lead = 0;
      while (lead < piece.size() && std::isspace(static_cast<unsigned char>(piece[lead]))) ++lead;
      std::size_t end = piece.size();
      while (end > lead && std::isspace(static_cast<unsigned char>(piece[end - 1]))) --end;
      if (end > lead) out.push_back({piece.substr(lead, end - lead), line, col0 + start + lead});
      start = i + 1;
    }
  }
}

}  // namespace

PresentationFile parse_presentation(std::string_view text) {
  enum class Section { None, Generators, Orders, Powers, Conjugates };
  Section section = Section::None;
  std::vector<Item> gens, orders, powers, conjugates;
  std::string name;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  Item orders_header{{}, 0, 0};
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t body = 0;
    std::size_t k = 0;
    while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
    std::size_t id_end = k;
    while (id_end < line.size() && is_name_char(line[id_end])) ++id_end;
    std::size_t colon = id_end;
    while (colon < line.size() && std::isspace(static_cast<unsigned char>(line[colon]))) ++colon;
    if (id_end > k && colon < line.size() && line[colon] == ':') {
      const auto key = line.substr(k, id_end - k);
      body = colon + 1;
      if (key == "generators") section = Section::Generators;
      else if (key == "orders") {
        section = Section::Orders;
        orders_header = {key, line_no, k + 1};
      } else if (key == "powers") section = Section::Powers;
      else if (key == "conjugates") section = Section::Conjugates;
      else if (key == "name") {
        auto rest = line.substr(body);
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.front()))) rest.remove_prefix(1);
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back()))) rest.remove_suffix(1);
        name = std::string(rest);
        section = Section::None;
        continue;
      } else {
        throw ParseError("unknown section '" + std::string(key) + "'", line_no, k + 1);
      }
    }
    std::vector<Item> items;
    split_items(line.substr(body), line_no, body + 1, items);
    if (items.empty()) continue;
    switch (section) {
      case Section::None:
        throw ParseError("content outside of a section", line_no, items.front().column);
      case Section::Generators: gens.insert(gens.end(), items.begin(), items.end()); break;
      case Section::Orders: orders.insert(orders.end(), items.begin(), items.end()); break;
      case Section::Powers: powers.insert(powers.end(), items.begin(), items.end()); break;
      case Section::Conjugates: conjugates.insert(conjugates.end(), items.begin(), items.end()); break;
    }
  }

  std::vector<std::string> names;
  for (const auto& it : gens) {
    Scanner sc(it);
    auto n = sc.name();
    if (!sc.at_end()) sc.fail("expected ',' between generator names");
    for (const auto& prev : names)
      if (prev == n) sc.fail_at("duplicate generator '" + std::string(n) + "'", it.column);
    names.emplace_back(n);
  }
  if (names.empty()) {
    if (!orders.empty()) throw ParseError("orders given without generators", orders.front().line, orders.front().column);
  }
  std::vector<unsigned> rel;
  for (const auto& it : orders) {
    Scanner sc(it);
    long e = sc.integer();
    if (e < 2) sc.fail_at("relative orders must be >= 2", it.column);
    if (!sc.at_end()) sc.fail("expected ',' between orders");
    rel.push_back(static_cast<unsigned>(e));
  }
  if (rel.size() != names.size())
    throw ParseError("expected " + std::to_string(names.size()) + " relative orders, found " +
                         std::to_string(rel.size()),
                     orders_header.line, orders_header.column);

  PresentationFile out{PcPresentation(names, rel), name};
  auto& pres = out.presentation;

  std::set<std::size_t> seen_powers;
  for (const auto& it : powers) {
    Scanner sc(it);
    sc.skip_ws();
    const std::size_t col = sc.column();
    const std::size_t g = lookup(pres, sc, sc.name(), col);
    sc.expect('^');
    const std::size_t ecol = sc.column();
    const long e = sc.integer();
    if (e != static_cast<long>(rel[g]))
      sc.fail_at("power relation must raise " + names[g] + " to its relative order " + std::to_string(rel[g]),
                 ecol);
    sc.expect('=');
    Word rhs = scan_word(pres, sc);
    if (!sc.at_end()) sc.fail("unexpected trailing text");
    if (!seen_powers.insert(g).second) sc.fail_at("power relation for " + names[g] + " given twice", col);
    pres.set_power(g, std::move(rhs));
  }

  std::set<std::pair<std::size_t, std::size_t>> seen_conj;
  for (const auto& it : conjugates) {
    Scanner sc(it);
    sc.skip_ws();
    const std::size_t col = sc.column();
    const std::size_t j = lookup(pres, sc, sc.name(), col);
    sc.expect('^');
    sc.skip_ws();
    const std::size_t col2 = sc.column();
    const std::size_t i = lookup(pres, sc, sc.name(), col2);
    if (i >= j) sc.fail_at("conjugating generator must come before the conjugated one", col2);
    sc.expect('=');
    Word rhs = scan_word(pres, sc);
    if (!sc.at_end()) sc.fail("unexpected trailing text");
    if (!seen_conj.insert({i, j}).second) sc.fail_at("conjugate relation given twice", col);
    pres.set_conjugate(i, j, std::move(rhs));
  }
  return out;
}

PresentationFile read_presentation_file(const std::string& path) {
  return parse_presentation(read_text_file(path));
}

Word parse_word(const PcPresentation& pres, std::string_view text) {
  Scanner sc(Item{text, 1, 1});
  Word w = scan_word(pres, sc);
  if (!sc.at_end()) sc.fail("unexpected trailing text");
  return w;
}

void write_group(std::ostream& os, const FiniteGroup& g) {
  const std::size_t n = g.order();
  os << "nilaut-group 1\n";
  os << "name " << g.name() << "\n";
  os << "family " << g.family() << "\n";
  os << "order " << n << "\n";
  os << "generators " << g.generators().size();
  for (Index x : g.generators()) os << ' ' << x;
  os << "\n";
  os << "generator-names " << g.generator_names().size();
  for (const auto& s : g.generator_names()) os << ' ' << s;
  os << "\n";
  os << "relative-orders " << g.relative_orders().size();
  for (unsigned e : g.relative_orders()) os << ' ' << e;
  os << "\n";
  os << "verification " << (g.verification() == Verification::Full ? "full" : "generator-triples") << "\n";
  os << "table\n";
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) os << (b ? " " : "") << g.table()[a * n + b];
    os << "\n";
  }
  os << "end\n";
}

std::string serialize_group(const FiniteGroup& g) {
  std::ostringstream os;
  write_group(os, g);
  return os.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}
  std::string_view next() {
    if (pos_ > text_.size()) throw ParseError("unexpected end of group file", line_ + 1, 1);
    std::size_t eol = text_.find('\n', pos_);
    if (eol == std::string_view::npos) eol = text_.size();
    auto line = text_.substr(pos_, eol - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = eol + 1;
    ++line_;
    return line;
  }
  // `key rest...`; returns rest.
  std::string keyed(std::string_view key) {
    auto line = next();
    if (line.substr(0, key.size()) != key || (line.size() > key.size() && line[key.size()] != ' '))
      throw ParseError("expected '" + std::string(key) + "'", line_, 1);
    return line.size() > key.size() ? std::string(line.substr(key.size() + 1)) : std::string{};
  }
  template <class T>
  std::vector<T> counted(std::string_view key) {
    std::istringstream ss(keyed(key));
    std::size_t count = 0;
    if (!(ss >> count)) throw ParseError("expected a count after '" + std::string(key) + "'", line_, key.size() + 2);
    std::vector<T> out(count);
    for (auto& v : out)
      if (!(ss >> v)) throw ParseError("too few values for '" + std::string(key) + "'", line_, 1);
    return out;
  }
  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

}  // namespace

FiniteGroup parse_group(std::string_view text, std::size_t full_scan_cap) {
  LineReader in(text);
  if (in.next() != "nilaut-group 1") throw ParseError("expected header 'nilaut-group 1'", 1, 1);
  std::string name = in.keyed("name");
  std::string family = in.keyed("family");
  std::size_t n = 0;
  {
    std::istringstream ss(in.keyed("order"));
    if (!(ss >> n) || n == 0) throw ParseError("bad order", in.line(), 7);
    if (n > 65536) throw CapExceeded("serialized group too large");
  }
  auto gens = in.counted<Index>("generators");
  auto gen_names = in.counted<std::string>("generator-names");
  auto rel = in.counted<unsigned>("relative-orders");
  std::string ver = in.keyed("verification");
  if (ver != "full" && ver != "generator-triples") throw ParseError("bad verification tag", in.line(), 14);
  if (in.next() != "table") throw ParseError("expected 'table'", in.line(), 1);
  std::vector<Index> table;
  table.reserve(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    std::istringstream ss{std::string(in.next())};
    for (std::size_t b = 0; b < n; ++b) {
      Index x;
      if (!(ss >> x)) throw ParseError("short table row", in.line(), 1);
      table.push_back(x);
    }
    std::string extra;
    if (ss >> extra) throw ParseError("long table row", in.line(), 1);
  }
  if (in.next() != "end") throw ParseError("expected 'end'", in.line(), 1);

  FiniteGroup g(n, std::move(table), std::move(gens), std::move(name), std::move(family), std::move(rel),
                std::move(gen_names));
  std::optional<kernels::Triple> bad;
  if (n <= full_scan_cap) {
    bad = kernels::find_associativity_violation_parallel(g.table(), n);
    g.set_verification(Verification::Full);
  } else {
    bad = kernels::find_generator_triple_violation_parallel(g.table(), n, g.generators());
    kernels::cayley_tree(g, g.generators());  // the triple check needs generators that generate
    g.set_verification(Verification::GeneratorTriples);
  }
  if (bad) throw ConsistencyError("serialized table is not associative");
  return g;
}

FiniteGroup read_group_file(const std::string& path, std::size_t full_scan_cap) {
  return parse_group(read_text_file(path), full_scan_cap);
}

}  // namespace nilaut
