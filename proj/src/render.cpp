#include "spjlab/render.hpp"

#include <algorithm>

namespace spjlab {
namespace {

struct Symbols {
  Notation notation;
  std::string_view select;
  std::string_view project;
  std::string_view join;
  std::string_view cross;
};

constexpr Symbols kUnicode{Notation::Unicode, "σ", "π", "⋈", "×"};
constexpr Symbols kLatex{Notation::Latex, "\\sigma", "\\pi", "\\bowtie", "\\times"};

std::string latex_name(const std::string& name) {
  std::string out;
  for (char c : name) {
    if (c == '_') out += '\\';
    out += c;
  }
  return out;
}

std::string relation_text(const Relation& relation, Notation notation) {
  if (notation == Notation::Latex) {
    std::string out = latex_name(relation.name);
    if (relation.alias) out += " \\text{ AS } " + latex_name(*relation.alias);
    return out;
  }
  return relation.alias ? relation.name + " AS " + *relation.alias : relation.name;
}

std::string column_list(const std::vector<ColumnRef>& columns, Notation notation) {
  std::string out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i > 0) out += ", ";
    out += format_operand(columns[i], notation);
  }
  return out;
}

bool is_binary(const RaExpr& expr) { return expr.arity() == 2; }

std::string linear(const RaExpr& expr, const Symbols& s) {
  auto right_operand = [&](const RaExpr& right) {
    return is_binary(right) ? "(" + linear(right, s) + ")" : linear(right, s);
  };
  return expr.visit([&](const auto& node) -> std::string {
    using T = std::decay_t<decltype(node)>;
    if constexpr (std::is_same_v<T, Relation>) {
      return relation_text(node, s.notation);
    } else if constexpr (std::is_same_v<T, Selection>) {
      return std::string(s.select) + "_{" + format_predicate(node.predicate, s.notation) + "}(" +
             linear(node.child, s) + ")";
    } else if constexpr (std::is_same_v<T, Projection>) {
      return std::string(s.project) + "_{" + column_list(node.columns, s.notation) + "}(" +
             linear(node.child, s) + ")";
    } else if constexpr (std::is_same_v<T, Join>) {
      return linear(node.left, s) + " " + std::string(s.join) + "_{" +
             format_predicate(node.predicate, s.notation) + "} " + right_operand(node.right);
    } else {
      return linear(node.left, s) + " " + std::string(s.cross) + " " + right_operand(node.right);
    }
  });
}

nlohmann::ordered_json tree_json(const RaExpr& expr, const NodePath& path,
                                 std::optional<std::span<const EvalResult>> results, std::size_t& slot) {
  nlohmann::ordered_json node;
  node["kind"] = to_string(expr.kind());
  node["label"] = node_label(expr);
  node["path"] = path.indices();
  if (results) node["cardinality"] = (*results)[slot].cardinality();
  ++slot;
  node["children"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < expr.arity(); ++i) {
    node["children"].push_back(tree_json(expr.child(i), path.child(i), results, slot));
  }
  return node;
}

std::string plural_rows(std::size_t n) { return std::to_string(n) + (n == 1 ? " row" : " rows"); }

void tree_text(const RaExpr& expr, const NodePath& path, std::optional<std::span<const EvalResult>> results,
               const TreeTextOptions& options, std::size_t& slot, std::string& out) {
  out.append(2 * path.depth(), ' ');
  const std::string label = node_label(expr);
  if (options.color) {
    out += (expr.kind() == NodeKind::Relation ? "\x1b[32m" : "\x1b[1;36m") + label + "\x1b[0m";
  } else {
    out += label;
  }
  out += "  [" + (path.is_root() ? std::string("root") : path.to_dotted()) + "]";
  if (results) out += "  " + plural_rows((*results)[slot].cardinality());
  out += '\n';
  ++slot;
  for (std::size_t i = 0; i < expr.arity(); ++i) {
    tree_text(expr.child(i), path.child(i), results, options, slot, out);
  }
}

std::size_t display_width(const std::string& text) {
  return static_cast<std::size_t>(std::count_if(text.begin(), text.end(), [](char c) {
    return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
  }));
}

}  // namespace

std::string to_unicode(const RaExpr& expr) { return linear(expr, kUnicode); }

std::string to_latex(const RaExpr& expr) { return linear(expr, kLatex); }

std::string node_label(const RaExpr& node) {
  return node.visit([&](const auto& n) -> std::string {
    using T = std::decay_t<decltype(n)>;
    if constexpr (std::is_same_v<T, Relation>) {
      return relation_text(n, Notation::Unicode);
    } else if constexpr (std::is_same_v<T, Selection>) {
      return "σ " + format_predicate(n.predicate, Notation::Unicode);
    } else if constexpr (std::is_same_v<T, Projection>) {
      return "π " + column_list(n.columns, Notation::Unicode);
    } else if constexpr (std::is_same_v<T, Join>) {
      return "⋈ " + format_predicate(n.predicate, Notation::Unicode);
    } else {
      return "×";
    }
  });
}

nlohmann::ordered_json to_tree_json(const RaExpr& expr, std::optional<std::span<const EvalResult>> results) {
  std::size_t slot = 0;
  return tree_json(expr, NodePath{}, results, slot);
}

std::string to_tree_text(const RaExpr& expr, std::optional<std::span<const EvalResult>> results,
                         const TreeTextOptions& options) {
  std::string out;
  std::size_t slot = 0;
  tree_text(expr, NodePath{}, results, options, slot, out);
  return out;
}

std::string to_table_text(const EvalTable& table) {
  const std::size_t n = table.schema.size();
  std::vector<std::string> header;
  std::vector<std::size_t> widths;
  for (const auto& column : table.schema.columns) {
    header.push_back(column.qualified_name());
    widths.push_back(display_width(header.back()));
  }
  std::vector<std::vector<std::string>> cells;
  for (const Row& row : table.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t c = 0; c < n; ++c) {
      line.push_back(to_display(row[c]));
      widths[c] = std::max(widths[c], display_width(line.back()));
    }
  }

  auto pad = [](const std::string& text, std::size_t width, bool right) {
    const std::string fill(width - display_width(text), ' ');
    return right ? fill + text : text + fill;
  };
  auto emit = [&](const std::vector<std::string>& line, const Row* row) {
    std::string out;
    for (std::size_t c = 0; c < n; ++c) {
      if (c > 0) out += " | ";
      const bool right = row != nullptr && std::holds_alternative<std::int64_t>((*row)[c]);
      std::string cell = pad(line[c], widths[c], right);
      if (c + 1 == n && !right) {
        // no trailing blanks on the last column
        cell.erase(cell.find_last_not_of(' ') + 1);
      }
      out += cell;
    }
    return out + '\n';
  };

  std::string out = emit(header, nullptr);
  for (std::size_t c = 0; c < n; ++c) {
    if (c > 0) out += "-+-";
    out.append(widths[c], '-');
  }
  out += '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) out += emit(cells[r], &table.rows[r]);
  out += "(" + plural_rows(table.rows.size()) + ")\n";
  return out;
}

nlohmann::ordered_json schema_to_json(const BoundSchema& schema) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& column : schema.columns) {
    out.push_back({{"qualifier", column.qualifier},
                   {"attribute", column.attribute},
                   {"type", to_string(column.type)}});
  }
  return out;
}

nlohmann::ordered_json rows_to_json(const std::vector<Row>& rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const Row& row : rows) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (const Value& value : row) cells.push_back(value_to_json(value));
    out.push_back(std::move(cells));
  }
  return out;
}

}  // namespace spjlab
