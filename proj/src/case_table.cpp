#include "edgeideal/case_table.hpp"

#include <charconv>

#include "case_table_data.hpp"
#include "edgeideal/errors.hpp"

namespace edgeideal {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto at = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, at == std::string_view::npos ? std::string_view::npos : at - pos)));
    if (at == std::string_view::npos) return out;
    pos = at + 1;
  }
}

class RowParser {
 public:
  explicit RowParser(std::size_t line) : line_(line) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("case table line " + std::to_string(line_) + ": " + what);
  }

  int parse_int(std::string_view s) const {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) fail("bad integer '" + std::string(s) + "'");
    return v;
  }

  int parse_residue(std::string_view s) const {
    int r = parse_int(s);
    if (r < 0 || r > 2) fail("residue out of range: " + std::string(s));
    return r;
  }

  TableFamily parse_family(std::string_view s) const {
    if (s == "bicyclic") return TableFamily::Bicyclic;
    if (s == "dumbbell") return TableFamily::Dumbbell;
    fail("unknown family '" + std::string(s) + "'");
  }

  PathCondition parse_path(std::string_view s) const {
    if (s == "-") return PathCondition::Any;
    if (s == "k%3=1") return PathCondition::KMod1;
    if (s == "k%3=2") return PathCondition::KMod2;
    if (s == "k=0") return PathCondition::KZero;
    if (s == "k%3=0&k>=3") return PathCondition::KMod0AtLeast3;
    fail("unknown path condition '" + std::string(s) + "'");
  }

  // "0", "3", "L", "L-1", "k", "k-4", "k+1"
  TemplateIndex parse_index(std::string_view s) const {
    TemplateIndex idx;
    s = trim(s);
    if (s.empty()) fail("empty index");
    if (s[0] == 'L' || s[0] == 'k') {
      idx.base = s[0] == 'L' ? TemplateIndex::Base::Last : TemplateIndex::Base::PathLength;
      s.remove_prefix(1);
      if (s.empty()) return idx;
      if (s[0] != '+' && s[0] != '-') fail("bad index offset");
      int sign = s[0] == '-' ? -1 : 1;
      idx.offset = sign * parse_int(s.substr(1));
      return idx;
    }
    idx.offset = parse_int(s);
    return idx;
  }

  // name[...] -> (name, inside)
  std::pair<std::string_view, std::string_view> bracketed(std::string_view s) const {
    auto open = s.find('[');
    if (open == std::string_view::npos || s.back() != ']') fail("expected name[...] in '" + std::string(s) + "'");
    return {trim(s.substr(0, open)), s.substr(open + 1, s.size() - open - 2)};
  }

  TemplateItem parse_item(std::string_view s) const {
    TemplateItem item;
    if (s.find('+') == std::string_view::npos) {
      auto [name, inside] = bracketed(s);
      if (name == "chain") {
        auto dots = inside.find("..");
        if (dots == std::string_view::npos) fail("chain needs a range");
        item.kind = TemplateItem::Kind::Chain;
        item.from = parse_index(inside.substr(0, dots));
        item.to = parse_index(inside.substr(dots + 2));
        if (item.from.base == TemplateIndex::Base::Last || item.to.base == TemplateIndex::Base::Last)
          fail("chain bounds cannot use L");
        return item;
      }
      if (name == "A" || name == "B") {
        item.source = name[0];
        if (trim(inside) == "*") {
          item.kind = TemplateItem::Kind::All;
          return item;
        }
        if (auto dots = inside.find(".."); dots != std::string_view::npos) {
          item.kind = TemplateItem::Kind::Range;
          item.from = parse_index(inside.substr(0, dots));
          item.to = parse_index(inside.substr(dots + 2));
          return item;
        }
      }
    }
    for (auto piece : split(s, '+')) item.atoms.push_back(parse_atom(piece));
    return item;
  }

  TemplateAtom parse_atom(std::string_view s) const {
    auto [name, inside] = bracketed(s);
    if (name != "A" && name != "B" && name != "e") fail("unknown atom '" + std::string(s) + "'");
    TemplateAtom atom{name[0], parse_index(inside)};
    if (atom.source == 'e' && atom.index.base == TemplateIndex::Base::Last) fail("e[...] cannot use L");
    if (atom.source != 'e' && atom.index.base == TemplateIndex::Base::PathLength) fail("A/B indices cannot use k");
    return atom;
  }

  std::vector<TemplateItem> parse_template(std::string_view s) const {
    std::vector<TemplateItem> items;
    for (auto piece : split(s, ',')) {
      if (piece.empty()) fail("empty template item");
      items.push_back(parse_item(piece));
    }
    return items;
  }

 private:
  std::size_t line_;
};

bool uses_path(const std::vector<TemplateItem>& items) {
  for (const auto& item : items) {
    if (item.kind == TemplateItem::Kind::Chain) return true;
    for (const auto& a : item.atoms)
      if (a.source == 'e') return true;
  }
  return false;
}

}  // namespace

std::vector<CaseRow> parse_case_table(std::string_view text) {
  std::vector<CaseRow> rows;
  std::size_t line_no = 0;
  for (auto raw : split(text, '\n')) {
    ++line_no;
    if (raw.empty() || raw[0] == '#') continue;
    RowParser parser(line_no);
    // the tag may itself contain '|' (as in |V|): four fixed columns come
    // first and the template follows the last separator
    std::vector<std::size_t> bars;
    for (std::size_t i = 0; i < raw.size(); ++i)
      if (raw[i] == '|') bars.push_back(i);
    if (bars.size() < 5) parser.fail("expected 6 columns");
    auto column = [&](std::size_t from, std::size_t to) { return trim(raw.substr(from, to - from)); };
    CaseRow row;
    row.line = line_no;
    row.family = parser.parse_family(column(0, bars[0]));
    row.path = parser.parse_path(column(bars[0] + 1, bars[1]));
    row.m_residue = parser.parse_residue(column(bars[1] + 1, bars[2]));
    row.n_residue = parser.parse_residue(column(bars[2] + 1, bars[3]));
    row.tag = std::string(column(bars[3] + 1, bars.back()));
    row.source_text = std::string(column(bars.back() + 1, raw.size()));
    if (row.tag.empty()) parser.fail("empty tag");
    row.items = parser.parse_template(row.source_text);
    if (row.family == TableFamily::Bicyclic) {
      if (row.path != PathCondition::Any) parser.fail("bicyclic rows take '-' as path condition");
      if (uses_path(row.items)) parser.fail("bicyclic rows cannot use path edges");
    } else if (row.path == PathCondition::Any) {
      parser.fail("dumbbell rows need a path condition");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<CaseRow>& case_table() {
  static const std::vector<CaseRow> table = parse_case_table(detail::kCaseTableText);
  return table;
}

bool path_condition_holds(PathCondition c, int k) noexcept {
  switch (c) {
    case PathCondition::Any: return true;
    case PathCondition::KMod1: return k % 3 == 1;
    case PathCondition::KMod2: return k % 3 == 2;
    case PathCondition::KZero: return k == 0;
    case PathCondition::KMod0AtLeast3: return k % 3 == 0 && k >= 3;
  }
  return false;
}

CaseMatch find_case(const std::vector<CaseRow>& table, TableFamily family, int m, int k, int n) {
  const CaseRow* direct = nullptr;
  const CaseRow* exchanged = nullptr;
  auto claim = [](const CaseRow*& slot, const CaseRow& row) {
    if (slot)
      throw ParseError("case table lines " + std::to_string(slot->line) + " and " + std::to_string(row.line) +
                       " overlap");
    slot = &row;
  };
  for (const auto& row : table) {
    if (row.family != family || !path_condition_holds(row.path, k)) continue;
    if (row.m_residue == m % 3 && row.n_residue == n % 3) claim(direct, row);
    if (row.m_residue == n % 3 && row.n_residue == m % 3) claim(exchanged, row);
  }
  if (direct) return {direct, false};
  if (exchanged) return {exchanged, true};
  throw DomainError("no sequence case for m=" + std::to_string(m) + ", k=" + std::to_string(k) +
                    ", n=" + std::to_string(n));
}

}  // namespace edgeideal
