#pragma once

#include "nck/bracket.hpp"
#include "nck/error.hpp"
#include "nck/function_space.hpp"
#include "nck/generators.hpp"
#include "nck/geometry.hpp"
#include "nck/io.hpp"
#include "nck/moduli.hpp"
#include "nck/net_builder.hpp"
#include "nck/vector.hpp"
