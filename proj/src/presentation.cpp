#include "sfdga/presentation.hpp"

namespace sfdga {

GroupWord free_reduce(const GroupWord& word) {
  GroupWord out;
  out.reserve(word.size());
  for (const auto& letter : word) {
    if (!out.empty() && out.back().generator == letter.generator && out.back().inverse != letter.inverse)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

std::string GroupPresentation::word_to_string(const GroupWord& word) const {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += '*';
    out += generators[word[i].generator];
    auto run = static_cast<long>(j - i);
    if (word[i].inverse) run = -run;
    if (run != 1) out += '^' + std::to_string(run);
    i = j;
  }
  return out;
}

std::string GroupPresentation::to_string() const {
  std::string out = "group " + name + " = < ";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
  out += generators.empty() ? "| " : " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : "") + word_to_string(relators[i]);
  out += relators.empty() ? ">" : " >";
  return out;
}

std::string AlgebraPresentation::to_string() const {
  std::string out = "algebra " + name + " = < ";
  const auto& gens = signature->generators();
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? ", " : "") + gens[i].name;
  out += gens.empty() ? "| " : " | ";
  for (std::size_t i = 0; i < relations.size(); ++i) out += (i ? ", " : "") + relations[i].to_string();
  out += relations.empty() ? ">" : " >";
  return out;
}

}  // namespace sfdga
