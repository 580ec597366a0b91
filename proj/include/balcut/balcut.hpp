#pragma once

#include "balcut/dense_engine.hpp"
#include "balcut/driver.hpp"
#include "balcut/embedding.hpp"
#include "balcut/error.hpp"
#include "balcut/expsketch.hpp"
#include "balcut/generators.hpp"
#include "balcut/graph.hpp"
#include "balcut/graph_io.hpp"
#include "balcut/krylov.hpp"
#include "balcut/operators.hpp"
#include "balcut/oracle.hpp"
#include "balcut/parallel.hpp"
#include "balcut/reference.hpp"
#include "balcut/regret.hpp"
#include "balcut/rounding.hpp"
#include "balcut/sdp.hpp"
#include "balcut/serialize.hpp"
#include "balcut/vertex_set.hpp"
