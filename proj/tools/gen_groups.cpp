// Regenerates the canonical group table files shipped under data/groups.
// Usage: gen_groups [output-dir]

#include <filesystem>
#include <fstream>
#include <iostream>

#include "pentagon/corpus.hpp"
#include "pentagon/io.hpp"

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "data/groups";
  std::filesystem::create_directories(dir);

  std::vector<pentagon::Group> groups;
  groups.push_back(pentagon::trivial_group());
  for (const pentagon::Group& g : pentagon::corpus_order_le_8()) groups.push_back(g);
  groups.push_back(pentagon::symmetric(4));

  for (const pentagon::Group& g : groups) {
    std::filesystem::path path = dir / (g.magma.name + ".group");
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot open " << path << "\n";
      return 1;
    }
    pentagon::io::write_group(out, g);
    std::cout << path.string() << "\n";
  }
  return 0;
}
