#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "polya/group.hpp"
#include "polya/inventory.hpp"
#include "polya/oracle.hpp"
#include "polya/polynomial_json.hpp"

namespace {

using nlohmann::json;

struct Options {
  std::string group_spec;
  std::string colors_csv;
  int num_colors = 0;
  std::string composition_text;
  std::string format = "text";
  std::uint64_t limit = polya::kDefaultColoringLimit;
  std::uint64_t max_order = polya::kDefaultMaxOrder;
};

std::vector<std::string> split_color_names(const std::string& csv) {
  std::vector<std::string> names;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  names.push_back(cur);
  for (const auto& name : names)
    if (name.empty()) throw polya::parse_error("empty color name in \"" + csv + "\"");
  return names;
}

polya::Composition parse_composition(const std::string& text) {
  polya::Composition comp;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw polya::parse_error("bad composition item \"" + item + "\" (expected color=count)");
    const std::string name = item.substr(0, eq);
    const std::string count_text = item.substr(eq + 1);
    std::size_t used = 0;
    int count = 0;
    try {
      count = std::stoi(count_text, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != count_text.size() || count < 0)
      throw polya::parse_error("bad count \"" + count_text + "\" for color \"" + name + "\"");
    if (!comp.counts.emplace(name, count).second)
      throw polya::parse_error("color \"" + name + "\" repeated in composition");
    start = end + 1;
  }
  return comp;
}

json integer_json(const polya::Integer& n) {
  if (n.fits_slong_p()) return json(static_cast<std::int64_t>(n.get_si()));
  return json(n.get_str());
}

std::string composition_text(const polya::Composition& comp, const polya::ColorSet& colors) {
  std::string out;
  for (const auto& name : colors.names()) {
    if (!out.empty()) out += ',';
    out += name + "=" + std::to_string(comp.counts.at(name));
  }
  return out;
}

polya::ColorSet resolve_colors(const Options& opts) {
  if (!opts.colors_csv.empty()) return polya::ColorSet(split_color_names(opts.colors_csv));
  if (opts.num_colors > 0) return polya::ColorSet::numbered(opts.num_colors);
  throw polya::error("give --colors or --num-colors");
}

int run(const std::string& command, const Options& opts) {
  const polya::PermutationGroup group = polya::parse_group_spec(opts.group_spec, opts.max_order);

  std::string text;
  json result;

  if (command == "count") {
    int k = opts.num_colors;
    if (k == 0) {
      if (opts.colors_csv.empty()) throw polya::error("count needs --colors or --num-colors");
      k = static_cast<int>(split_color_names(opts.colors_csv).size());
    }
    const polya::Integer n = polya::count_distinct(group, k);
    text = n.get_str() + "\n";
    result = {{"count", integer_json(n)}};
  } else if (command == "coeff") {
    if (opts.colors_csv.empty()) throw polya::error("coeff needs --colors");
    const polya::ColorSet colors(split_color_names(opts.colors_csv));
    const polya::Composition comp = parse_composition(opts.composition_text);
    const polya::Integer n = polya::count_by_composition(group, colors, comp);
    text = n.get_str() + "\n";
    result = {{"count", integer_json(n)}};
  } else if (command == "cycle-index") {
    const polya::Polynomial index = polya::cycle_index(group);
    const auto order = polya::cycle_index_variable_order(group.degree());
    text = polya::to_string(index, order) + "\n";
    result = {{"polynomial", polya::polynomial_to_json(index, order)}};
  } else if (command == "inventory") {
    if (opts.colors_csv.empty()) throw polya::error("inventory needs --colors");
    const polya::ColorSet colors(split_color_names(opts.colors_csv));
    const polya::Polynomial inv = polya::pattern_inventory(group, colors);
    text = polya::to_string(inv, colors.names()) + "\n";
    result = {{"polynomial", polya::polynomial_to_json(inv, colors.names())}};
  } else if (command == "orbits") {
    const polya::ColorSet colors = resolve_colors(opts);
    const auto orbits =
        polya::enumerate_orbits(group, static_cast<int>(colors.size()), opts.limit);
    json arr = json::array();
    for (const auto& orbit : orbits) {
      const auto comp = polya::coloring_composition(orbit.representative, colors);
      const std::string rep = polya::format_coloring(orbit.representative, colors);
      text += rep + " " + std::to_string(orbit.members.size()) + " " +
              composition_text(comp, colors) + "\n";
      json comp_json = json::object();
      for (const auto& [name, count] : comp.counts) comp_json[name] = count;
      arr.push_back({{"representative", rep},
                     {"size", orbit.members.size()},
                     {"composition", comp_json}});
    }
    result = {{"orbits", arr}};
  } else if (command == "group") {
    json arr = json::array();
    for (const auto& g : group.elements()) {
      const std::string formatted = polya::format_permutation(g);
      text += formatted + "\n";
      arr.push_back(formatted);
    }
    result = {{"elements", arr}};
  } else {
    throw polya::error("unknown command \"" + command + "\"");
  }

  if (opts.format == "json") {
    const json doc = {{"command", command},
                      {"group",
                       {{"spec", opts.group_spec},
                        {"order", group.order()},
                        {"degree", group.degree()}}},
                      {"result", result}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polya enumeration: cycle indices, pattern inventories, exact orbit counting"};
  app.require_subcommand(1);

  Options opts;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--group", opts.group_spec,
                    "Group spec: cyclic:N, dihedral:N, symmetric:N, trivial:N, or "
                    "gens:<perm>[;<perm>...]@N")
        ->required();
    sub->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--max-order", opts.max_order, "Largest allowed group order")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  const auto add_colors = [&](CLI::App* sub, bool with_num_colors) {
    auto* colors =
        sub->add_option("--colors", opts.colors_csv, "Comma-separated color names, e.g. r,w,b");
    if (with_num_colors) {
      auto* num = sub->add_option("--num-colors", opts.num_colors, "Number of colors")
                      ->check(CLI::PositiveNumber);
      colors->excludes(num);
      num->excludes(colors);
    } else {
      colors->required();
    }
  };

  auto* count = app.add_subcommand("count", "Number of distinct colorings up to symmetry");
  add_common(count);
  add_colors(count, true);

  auto* coeff =
      app.add_subcommand("coeff", "Number of distinct colorings with a given composition");
  add_common(coeff);
  add_colors(coeff, false);
  coeff->add_option("--composition", opts.composition_text, "Color counts, e.g. r=2,w=1,b=1")
      ->required();

  auto* cycle_index = app.add_subcommand("cycle-index", "Cycle index polynomial of the group");
  add_common(cycle_index);

  auto* inventory =
      app.add_subcommand("inventory", "Pattern inventory polynomial in the color variables");
  add_common(inventory);
  add_colors(inventory, false);

  auto* orbits = app.add_subcommand("orbits", "Brute-force orbit enumeration of all colorings");
  add_common(orbits);
  add_colors(orbits, true);
  orbits->add_option("--limit", opts.limit, "Largest allowed number of colorings")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* group = app.add_subcommand("group", "List the group's elements in cycle notation");
  add_common(group);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), opts);
  } catch (const polya::limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
