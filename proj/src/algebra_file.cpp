#include "solvalg/algebra_file.hpp"

#include <cctype>
#include <map>

#include "solvalg/errors.hpp"

namespace solvalg {

namespace {

bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Cursor over one line; columns are 1-based.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return pos_ + 1; }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error(std::string("expected '") + c + "'");
  }
  void expect_end() {
    if (!at_end()) error("unexpected '" + std::string(text_.substr(pos_)) + "'");
  }

  [[noreturn]] void error(const std::string& msg) const { throw ParseError(line_, column(), msg); }
  [[noreturn]] void error_at(std::size_t col, const std::string& msg) const {
    throw ParseError(line_, col, msg);
  }

  /// [A-Za-z][A-Za-z0-9_]*~*
  std::string_view name() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !name_start(text_[pos_])) error("expected a name");
    ++pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    while (pos_ < text_.size() && text_[pos_] == '~') ++pos_;
    return text_.substr(start, pos_ - start);
  }

  /// digits with an optional /digits
  std::string_view number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    if (pos_ == start) error("expected a number");
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t den = pos_;
      while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
      if (pos_ == den) error("malformed number");
    }
    if (pos_ < text_.size() && (name_char(text_[pos_]) || text_[pos_] == '/')) {
      error_at(start + 1, "malformed number");
    }
    return text_.substr(start, pos_ - start);
  }

  std::uint64_t integer() {
    skip_space();
    const std::size_t col = column();
    const std::string_view digits = number();
    if (digits.find('/') != std::string_view::npos) error_at(col, "expected an integer");
    if (digits.size() > 18) error_at(col, "integer too large");
    return std::stoull(std::string(digits));
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::size_t lookup(Cursor& cur, const std::vector<std::string>& names, std::string_view name,
                   std::size_t col) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  cur.error_at(col, "unknown generator '" + std::string(name) + "'");
}

struct ParsedTerm {
  Monomial m;
  Scalar c;
  std::size_t column;
};

// poly := ['+'|'-'] term (('+'|'-') term)*
// term := (number | factor) ('*' factor)*,  factor := name ['^' integer]
std::vector<ParsedTerm> parse_terms(Cursor& cur, const std::vector<std::string>& names,
                                    Field field) {
  std::vector<ParsedTerm> terms;
  bool negative = false;
  if (cur.accept('-')) {
    negative = true;
  } else {
    cur.accept('+');
  }
  while (true) {
    cur.skip_space();
    ParsedTerm t{Monomial(names.size()), Scalar::one(field), cur.column()};
    bool need_factor = true;
    if (digit(cur.peek())) {
      const std::size_t col = cur.column();
      const std::string_view num = cur.number();
      try {
        t.c = Scalar::parse(field, num);
      } catch (const AlgebraError& e) {
        cur.error_at(col, e.what());
      }
      need_factor = cur.accept('*');
    }
    std::size_t last = 0;
    bool any = false;
    while (need_factor) {
      cur.skip_space();
      const std::size_t col = cur.column();
      if (digit(cur.peek())) cur.error("coefficient must come first in a term");
      const std::size_t g = lookup(cur, names, cur.name(), col);
      std::uint64_t e = 1;
      if (cur.accept('^')) {
        const std::size_t ecol = cur.column();
        e = cur.integer();
        if (e == 0) cur.error_at(ecol, "exponent must be positive");
        if (e > 0xffffffffULL) cur.error_at(ecol, "exponent too large");
      }
      if (any && g < last) {
        cur.error_at(col, "generators in a term must follow the declared order");
      }
      if (static_cast<std::uint64_t>(t.m[g]) + e > 0xffffffffULL) {
        cur.error_at(col, "exponent too large");
      }
      t.m[g] += static_cast<Exponent>(e);
      last = g;
      any = true;
      need_factor = cur.accept('*');
    }
    if (negative) t.c = -t.c;
    terms.push_back(std::move(t));
    if (cur.accept('+')) {
      negative = false;
    } else if (cur.accept('-')) {
      negative = true;
    } else {
      break;
    }
  }
  return terms;
}

Polynomial collect(const std::vector<ParsedTerm>& terms, std::size_t n, Field field) {
  Polynomial f(n, field);
  for (const auto& t : terms) f.add_term(t.m, t.c);
  return f;
}

std::vector<std::size_t> parse_priority(Cursor& cur, const std::vector<std::string>& names) {
  std::vector<std::size_t> priority;
  std::vector<bool> seen(names.size(), false);
  do {
    const std::size_t col = (cur.skip_space(), cur.column());
    const std::size_t g = lookup(cur, names, cur.name(), col);
    if (seen[g]) cur.error_at(col, "generator '" + names[g] + "' listed twice");
    seen[g] = true;
    priority.push_back(g);
  } while (cur.accept('>'));
  if (priority.size() != names.size()) cur.error("ordering must list every generator");
  return priority;
}

std::vector<std::int64_t> parse_weights(Cursor& cur, std::size_t n) {
  std::vector<std::int64_t> w;
  const std::size_t col = (cur.skip_space(), cur.column());
  do {
    cur.skip_space();
    if (cur.peek() == '-') cur.error("weights must be positive");
    const std::size_t wcol = cur.column();
    const std::uint64_t v = cur.integer();
    if (v == 0) cur.error_at(wcol, "weights must be positive");
    w.push_back(static_cast<std::int64_t>(v));
  } while (cur.accept(','));
  if (w.size() != n) cur.error_at(col, "expected " + std::to_string(n) + " weights");
  cur.expect(';');
  return w;
}

MonomialOrdering parse_ordering(Cursor& cur, const std::vector<std::string>& names,
                                const std::optional<DegreeFunction>& declared) {
  const std::size_t col = (cur.skip_space(), cur.column());
  const std::string kind(cur.name());
  cur.expect('(');
  MonomialOrdering ord = MonomialOrdering::natural_lex(names.size());
  if (kind == "lex") {
    ord = MonomialOrdering::lex(parse_priority(cur, names));
  } else if (kind == "grlex" || kind == "grevlex") {
    DegreeFunction d = DegreeFunction::standard(names.size());
    if (digit(cur.peek()) || cur.peek() == '-') d = DegreeFunction(parse_weights(cur, names.size()));
    auto priority = parse_priority(cur, names);
    ord = kind == "grlex" ? MonomialOrdering::grlex(d, std::move(priority))
                          : MonomialOrdering::grevlex(d, std::move(priority));
  } else if (kind == "gr") {
    std::optional<DegreeFunction> d;
    if (digit(cur.peek()) || cur.peek() == '-') {
      d = DegreeFunction(parse_weights(cur, names.size()));
    } else if (declared) {
      d = declared;
    } else {
      cur.error_at(col, "gr(...) needs weights: declare them on gens or write gr(w,...;base)");
    }
    ord = make_graded(parse_ordering(cur, names, declared), *d);
  } else if (kind == "rees") {
    if (names.size() < 2) cur.error_at(col, "rees(...) needs at least two generators");
    const std::vector<std::string> base_names(names.begin(), names.end() - 1);
    std::optional<DegreeFunction> base_declared;
    if (declared) {
      std::vector<std::int64_t> w(declared->weights().begin(), declared->weights().end() - 1);
      base_declared = DegreeFunction(w);
    }
    ord = MonomialOrdering::rees(parse_ordering(cur, base_names, base_declared));
  } else {
    cur.error_at(col, "unknown ordering '" + kind + "'");
  }
  cur.expect(')');
  return ord;
}

struct Builder {
  std::optional<Field> field;
  std::optional<AlgebraPresentation> presentation;
  std::optional<MonomialOrdering> ordering;
  std::optional<DegreeFunction> degree;
  std::map<std::pair<std::size_t, std::size_t>, bool> seen_relations;
  std::optional<std::pair<std::size_t, std::size_t>> order_position;
};

void parse_field(Cursor& cur, Builder& b) {
  const std::size_t col = (cur.skip_space(), cur.column());
  if (b.field) cur.error_at(col, "field declared twice");
  if (b.presentation) cur.error_at(col, "field must be declared before gens");
  const std::string_view name = cur.name();
  if (name == "Q") {
    b.field = Field::rationals();
  } else if (name == "GF") {
    cur.expect('(');
    const std::size_t pcol = (cur.skip_space(), cur.column());
    const std::uint64_t p = cur.integer();
    try {
      b.field = Field::prime(p);
    } catch (const AlgebraError&) {
      cur.error_at(pcol, "GF(p) needs a prime p below 2^32");
    }
    cur.expect(')');
  } else {
    cur.error_at(col, "unknown field '" + std::string(name) + "'");
  }
  cur.expect_end();
}

void parse_gens(Cursor& cur, Builder& b) {
  const std::size_t col = (cur.skip_space(), cur.column());
  if (b.presentation) cur.error_at(col, "gens declared twice");
  std::vector<std::string> names;
  std::vector<std::int64_t> weights;
  bool with_weights = false;
  while (!cur.at_end()) {
    const std::size_t ncol = cur.column();
    const std::string name(cur.name());
    for (const auto& other : names) {
      if (other == name) cur.error_at(ncol, "generator '" + name + "' declared twice");
    }
    names.push_back(name);
    if (cur.accept(':')) {
      if (names.size() > 1 && !with_weights) cur.error_at(ncol, "weights must be given for all generators or none");
      with_weights = true;
      cur.skip_space();
      if (cur.peek() == '-') cur.error("weights must be positive");
      const std::size_t wcol = cur.column();
      const std::uint64_t w = cur.integer();
      if (w == 0) cur.error_at(wcol, "weights must be positive");
      weights.push_back(static_cast<std::int64_t>(w));
    } else if (with_weights) {
      cur.error_at(ncol, "weights must be given for all generators or none");
    }
  }
  if (names.empty()) cur.error("gens needs at least one generator");
  b.presentation.emplace(b.field.value_or(Field::rationals()), std::move(names));
  if (with_weights) b.degree = DegreeFunction(weights);
}

void parse_order(Cursor& cur, Builder& b) {
  const std::size_t col = (cur.skip_space(), cur.column());
  if (!b.presentation) cur.error_at(col, "order must come after gens");
  if (b.ordering) cur.error_at(col, "order declared twice");
  b.ordering = parse_ordering(cur, b.presentation->names(), b.degree);
  cur.expect_end();
}

void parse_rel(Cursor& cur, Builder& b) {
  const std::size_t col = (cur.skip_space(), cur.column());
  if (!b.presentation) cur.error_at(col, "rel must come after gens");
  AlgebraPresentation& p = *b.presentation;
  const std::size_t j = lookup(cur, p.names(), cur.name(), col);
  if (!cur.accept('*')) cur.error_at(col, "left side must have the form b*a");
  const std::size_t icol = (cur.skip_space(), cur.column());
  const std::size_t i = lookup(cur, p.names(), cur.name(), icol);
  if (cur.peek() != '=') cur.error_at(col, "left side must have the form b*a");
  if (j <= i) cur.error_at(col, "left side must be b*a with b declared after a");
  if (b.seen_relations[{j, i}]) cur.error_at(col, "duplicate relation for " + p.name(j) + "*" + p.name(i));
  b.seen_relations[{j, i}] = true;
  cur.expect('=');
  const std::size_t rhs_col = (cur.skip_space(), cur.column());
  const auto terms = parse_terms(cur, p.names(), p.field());
  cur.expect_end();
  Monomial swapped(p.nvars());
  ++swapped[i];
  ++swapped[j];
  Polynomial rhs = collect(terms, p.nvars(), p.field());
  const Scalar lambda = rhs.coefficient(swapped);
  if (lambda.is_zero()) {
    std::size_t where = rhs_col;
    for (const auto& t : terms) {
      if (t.m == swapped) {
        where = t.column;
        break;
      }
    }
    cur.error_at(where, "coefficient of " + p.name(i) + "*" + p.name(j) + " must be nonzero");
  }
  rhs.add_term(swapped, -lambda);
  p.set_relation(j, i, lambda, std::move(rhs));
}

}  // namespace

AlgebraFile parse_algebra_file(std::string_view text) {
  Builder b;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Cursor cur(line, line_no);
    if (cur.at_end()) continue;
    const std::size_t col = cur.column();
    const std::string_view directive = cur.name();
    if (directive == "field") {
      parse_field(cur, b);
    } else if (directive == "gens") {
      parse_gens(cur, b);
    } else if (directive == "order") {
      parse_order(cur, b);
    } else if (directive == "rel") {
      parse_rel(cur, b);
    } else {
      cur.error_at(col, "unknown directive '" + std::string(directive) + "'");
    }
  }
  if (!b.presentation) throw ParseError(1, 1, "missing gens declaration");
  MonomialOrdering ord = b.ordering.value_or(MonomialOrdering::natural_lex(b.presentation->nvars()));
  return AlgebraFile{std::move(*b.presentation), std::move(ord), std::move(b.degree)};
}

Polynomial parse_poly(std::string_view text, const AlgebraPresentation& p) {
  Cursor cur(text, 1);
  if (cur.at_end()) cur.error("empty polynomial");
  const auto terms = parse_terms(cur, p.names(), p.field());
  cur.expect_end();
  return collect(terms, p.nvars(), p.field());
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names.at(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string format_poly(const Polynomial& f, const std::vector<std::string>& names,
                        const MonomialOrdering& ord) {
  if (f.is_zero()) return "0";
  std::vector<const std::pair<const Monomial, Scalar>*> terms;
  for (const auto& t : f.terms()) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(),
            [&](const auto* a, const auto* b) { return ord.compare(a->first, b->first) > 0; });
  std::string out;
  for (const auto* t : terms) {
    const bool neg = t->second.is_negative();
    const Scalar c = neg ? -t->second : t->second;
    if (out.empty()) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    const bool unit = t->first.is_one();
    if (unit) {
      out += c.to_string();
    } else if (c.is_one()) {
      out += format_monomial(t->first, names);
    } else {
      out += c.to_string() + "*" + format_monomial(t->first, names);
    }
  }
  return out;
}

namespace {

std::string join_priority(const std::vector<std::size_t>& priority,
                          const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t g : priority) {
    if (!out.empty()) out += '>';
    out += names.at(g);
  }
  return out;
}

std::string join_weights(const DegreeFunction& d) {
  std::string out;
  for (auto w : d.weights()) {
    if (!out.empty()) out += ',';
    out += std::to_string(w);
  }
  return out;
}

}  // namespace

std::string format_ordering(const MonomialOrdering& ord, const std::vector<std::string>& names,
                            const std::optional<DegreeFunction>& declared) {
  switch (ord.kind()) {
    case OrderingKind::Lex:
      return "lex(" + join_priority(ord.priority(), names) + ")";
    case OrderingKind::GrLex:
    case OrderingKind::GrevLex: {
      std::string out = ord.kind() == OrderingKind::GrLex ? "grlex(" : "grevlex(";
      if (*ord.degree() != DegreeFunction::standard(names.size())) {
        out += join_weights(*ord.degree()) + ";";
      }
      return out + join_priority(ord.priority(), names) + ")";
    }
    case OrderingKind::Graded: {
      std::string out = "gr(";
      if (!declared || *declared != *ord.degree()) out += join_weights(*ord.degree()) + ";";
      return out + format_ordering(*ord.base(), names, declared) + ")";
    }
    case OrderingKind::Rees: {
      const std::vector<std::string> base_names(names.begin(), names.end() - 1);
      std::optional<DegreeFunction> base_declared;
      if (declared) {
        std::vector<std::int64_t> w(declared->weights().begin(), declared->weights().end() - 1);
        base_declared = DegreeFunction(w);
      }
      return "rees(" + format_ordering(*ord.base(), base_names, base_declared) + ")";
    }
  }
  return "";
}

std::string format_algebra_file(const AlgebraFile& file) {
  const AlgebraPresentation& p = file.presentation;
  std::string out = "field " + p.field().to_string() + "\n";
  out += "gens";
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    out += " " + p.name(i);
    if (file.degree) out += ":" + std::to_string(file.degree->weight(i));
  }
  out += "\norder " + format_ordering(file.ordering, p.names(), file.degree) + "\n";
  for (std::size_t j = 0; j < p.nvars(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (p.is_commuting(j, i)) continue;
      const Relation& rel = p.relation(j, i);
      Monomial swapped(p.nvars());
      ++swapped[i];
      ++swapped[j];
      Polynomial rhs = rel.tail;
      rhs.add_term(swapped, rel.lambda);
      out += "rel " + p.name(j) + "*" + p.name(i) + " = " +
             format_poly(rhs, p.names(), file.ordering) + "\n";
    }
  }
  return out;
}

}  // namespace solvalg
