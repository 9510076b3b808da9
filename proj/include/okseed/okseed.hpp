#pragma once

#include "okseed/cluster.hpp"
#include "okseed/hookalg.hpp"
#include "okseed/linalg.hpp"
#include "okseed/lyndon.hpp"
#include "okseed/okbody.hpp"
#include "okseed/rational.hpp"
#include "okseed/revlex.hpp"
#include "okseed/rootsys.hpp"
#include "okseed/serialize.hpp"
