#pragma once

#include "whmin/words.hpp"
#include "whmin/agraph.hpp"
#include "whmin/whitehead.hpp"
#include "whmin/hypergraph.hpp"
#include "whmin/mincut.hpp"
#include "whmin/minimize.hpp"
#include "whmin/deciders.hpp"
