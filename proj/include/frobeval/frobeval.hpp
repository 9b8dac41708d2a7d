#pragma once

#include "frobeval/autoeval.hpp"
#include "frobeval/costmodel.hpp"
#include "frobeval/gf.hpp"
#include "frobeval/io.hpp"
#include "frobeval/op_count.hpp"
#include "frobeval/poly.hpp"
#include "frobeval/rs.hpp"
