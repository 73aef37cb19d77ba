#pragma once

#include "dagsets/acyclic_ordering.hpp"
#include "dagsets/cc_enum.hpp"
#include "dagsets/connected_enum.hpp"
#include "dagsets/convex_enum.hpp"
#include "dagsets/digraph.hpp"
#include "dagsets/edge_list.hpp"
#include "dagsets/errors.hpp"
#include "dagsets/generators.hpp"
#include "dagsets/oracle.hpp"
#include "dagsets/parallel.hpp"
#include "dagsets/predicates.hpp"
#include "dagsets/sink.hpp"
#include "dagsets/transitive_closure.hpp"
#include "dagsets/vertex_set.hpp"
