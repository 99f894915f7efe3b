// Writes the two dragons straight from their turn sequences, next to the
// v_2 rendering whose spikes hide the same Levy curve.
//
//   levy_gallery [output-dir]

#include <filesystem>
#include <fstream>
#include <iostream>

#include "padic/padic.hpp"

namespace {

void write(const std::filesystem::path& path, const padic::TurnProgram& program) {
  std::ofstream(path) << padic::to_svg(padic::trace(program));
  std::cout << path.string() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : ".";
  std::filesystem::create_directories(dir);

  const auto levy = padic::levy_turns(12);
  write(dir / "levy_turns.svg", {{levy.terms.begin(), levy.terms.end()}, padic::Angle{90}});

  const auto heighway = padic::heighway_turns(14);
  write(dir / "heighway_turns.svg", {{heighway.terms.begin(), heighway.terms.end()}, padic::Angle{90}});

  const auto v2 = padic::generate_dci(2, 1 << 15);
  write(dir / "v2_90.svg", {{v2.terms().begin(), v2.terms().end()}, padic::Angle{90}});
}
