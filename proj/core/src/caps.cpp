#include "edgering/caps.hpp"

#include <cstdlib>
#include <sstream>
#include <string>

#include "edgering/errors.hpp"

namespace edgering {

namespace {

Caps parseCaps() {
    Caps c;
    const char* env = std::getenv("EDGERING_CAPS");
    if (!env) return c;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw Error("EDGERING_CAPS entries must look like name=value, got '" + item + "'");
        std::string key = item.substr(0, eq);
        int value = std::stoi(item.substr(eq + 1));
        if (value <= 0) throw Error("EDGERING_CAPS values must be positive");
        if (key == "lattice")
            c.lattice = value;
        else if (key == "ground")
            c.ground = value;
        else if (key == "edges")
            c.edges = value;
        else
            throw Error("unknown EDGERING_CAPS key '" + key + "'");
    }
    return c;
}

} // namespace

const Caps& caps() {
    static const Caps c = parseCaps();
    return c;
}

} // namespace edgering
