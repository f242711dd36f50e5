#pragma once

#include "hds/engine.hpp"

#include <map>
#include <string>

namespace hds {

// A triangulated punctured surface with its named standard curves and arcs.
// Arcs s_1..s_{n-1} form a path through the punctures; s_0 closes it up where it exists.
struct StandardModel {
    TriPtr T;
    std::map<std::string, Lamination> curves;
    std::map<std::string, Lamination> arcs;
};

StandardModel load_standard(int genus, int punctures);

} // namespace hds
