#pragma once

#include "weylk/arith.hpp"
#include "weylk/smith.hpp"
#include "weylk/rootdata.hpp"
#include "weylk/finitegroup.hpp"
#include "weylk/character.hpp"
#include "weylk/alcove.hpp"
#include "weylk/bredon.hpp"
#include "weylk/chernoracle.hpp"
#include "weylk/clifford.hpp"
#include "weylk/serialize.hpp"
