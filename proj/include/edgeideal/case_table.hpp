#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace edgeideal {

/// Index inside a template: base + offset, where base is a literal 0, the
/// last index L of the referenced cycle sequence, or the path length k.
struct TemplateIndex {
  enum class Base { Zero, Last, PathLength };
  Base base = Base::Zero;
  int offset = 0;
};

/// One polynomial reference: A[i] or B[i] (cycle sequences) or e[i] (path
/// edge).
struct TemplateAtom {
  char source;  // 'A', 'B' or 'e'
  TemplateIndex index;
};

/// One comma-separated template item.
struct TemplateItem {
  enum class Kind {
    Sum,    // atoms joined by '+', emits one polynomial
    Range,  // A[i..j] or B[i..j]
    All,    // A[*] or B[*]
    Chain,  // chain[a..b]
  };
  Kind kind = Kind::Sum;
  std::vector<TemplateAtom> atoms;  // Sum
  char source = 0;                  // Range, All
  TemplateIndex from, to;           // Range, Chain
};

enum class TableFamily { Bicyclic, Dumbbell };

/// Condition on the dumbbell path length k.
enum class PathCondition { Any, KMod1, KMod2, KZero, KMod0AtLeast3 };

struct CaseRow {
  TableFamily family;
  PathCondition path;
  int m_residue;
  int n_residue;
  std::string tag;
  std::string source_text;
  std::vector<TemplateItem> items;
  std::size_t line;
};

/// Parses the table format documented at the top of data/sequence_cases.txt.
/// Throws ParseError with the offending line number.
std::vector<CaseRow> parse_case_table(std::string_view text);

/// The table compiled into the library.
const std::vector<CaseRow>& case_table();

bool path_condition_holds(PathCondition c, int k) noexcept;

struct CaseMatch {
  const CaseRow* row;
  /// The instance matched with its two cycles in the opposite roles.
  bool exchanged;
};

/// Row for an instance with cycle lengths m, n (and path length k for a
/// dumbbell). A direct match wins over an exchanged one. Throws DomainError
/// when no row applies and ParseError when two rows collide.
CaseMatch find_case(const std::vector<CaseRow>& table, TableFamily family, int m, int k, int n);

}  // namespace edgeideal
