#!/usr/bin/env python3
# Copyright 2026 The uavplan Authors
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Generates the built-in CNN layer profiles (profiles/*.csv).

Per-layer memory, FLOPs, and output sizes are derived from standard layer
shape arithmetic for a 595x326 RGB input with 4-byte floats:

  conv (valid):   out = (h-k+1) x (w-k+1) x c_out
                  params = k*k*c_in*c_out + c_out
                  flops  = 2*k*k*c_in*c_out*out_h*out_w
  conv (same):    out = h x w x c_out, same params/flops formula
  pool (2x2):     out = floor(h/2) x floor(w/2) x c, flops = out_elems * 4
  dense:          params = in*out + out, flops = 2*in*out
  global_avg:     flops = in_elems

mem_bytes of a layer = 4 * (params + output elements).

The classic fully-connected heads are expressed as convolutions (LeNet C5 as
a 5x5 conv, VGG fc1 as a 7x7 conv, fc2 as 1x1) so the parameter counts stay
at their canonical values (~0.062 M for LeNet, ~138 M for VGG-16)
independently of the input resolution. The final classifier is a global
average pool followed by a dense layer.

VGG-16 folding to 18 layers: the pools of blocks 3-5 are folded into the
last conv of their block; pool1 and pool2 stay separate layers.

This script is the source of truth for the constants embedded in
src/cnn_profile.cpp; a unit test checks that the shipped CSVs and the
embedded constants agree.
"""

import os

BYTES = 4
IN_H, IN_W, IN_C = 326, 595, 3  # 595x326 RGB


class Shape:
    def __init__(self, h, w, c):
        self.h, self.w, self.c = h, w, c

    def elems(self):
        return self.h * self.w * self.c


def conv(shape, k, c_out, same=False):
    if same:
        oh, ow = shape.h, shape.w
    else:
        oh, ow = shape.h - k + 1, shape.w - k + 1
    params = k * k * shape.c * c_out + c_out
    flops = 2 * k * k * shape.c * c_out * oh * ow
    return Shape(oh, ow, c_out), params, flops


def pool(shape):
    out = Shape(shape.h // 2, shape.w // 2, shape.c)
    return out, 0, out.elems() * 4


def global_avg_dense(shape, n_out):
    params = shape.c * n_out + n_out
    flops = shape.elems() + 2 * shape.c * n_out
    return Shape(1, 1, n_out), params, flops


def lenet():
    layers = []
    s = Shape(IN_H, IN_W, IN_C)
    s, p, f = conv(s, 5, 6)
    layers.append(("conv1", p, f, s))
    s, p, f = pool(s)
    layers.append(("pool1", p, f, s))
    s, p, f = conv(s, 5, 16)
    layers.append(("conv2", p, f, s))
    s, p, f = pool(s)
    layers.append(("pool2", p, f, s))
    s, p, f = conv(s, 5, 120)
    layers.append(("conv3", p, f, s))
    s, p, f = conv(s, 1, 84)
    layers.append(("conv4", p, f, s))
    s, p, f = global_avg_dense(s, 10)
    layers.append(("classifier", p, f, s))
    return "lenet", layers


def vgg16():
    layers = []
    s = Shape(IN_H, IN_W, IN_C)

    def block(convs, c_out, names, fold_pool):
        nonlocal s
        for i in range(convs):
            ns, p, f = conv(s, 3, c_out, same=True)
            last = i == convs - 1
            if last and fold_pool:
                ps, _, pf = pool(ns)
                layers.append((names[i], p, f + pf, ps))
                s = ps
            else:
                layers.append((names[i], p, f, ns))
                s = ns
        if not fold_pool:
            ps, p, f = pool(s)
            layers.append((names[-1].split("_")[0] + "_pool", p, f, ps))
            s = ps

    block(2, 64, ["conv1_1", "conv1_2"], fold_pool=False)
    block(2, 128, ["conv2_1", "conv2_2"], fold_pool=False)
    block(3, 256, ["conv3_1", "conv3_2", "conv3_3"], fold_pool=True)
    block(3, 512, ["conv4_1", "conv4_2", "conv4_3"], fold_pool=True)
    block(3, 512, ["conv5_1", "conv5_2", "conv5_3"], fold_pool=True)
    ns, p, f = conv(s, 7, 4096)
    layers.append(("fc1", p, f, ns))
    s = ns
    ns, p, f = conv(s, 1, 4096)
    layers.append(("fc2", p, f, ns))
    s = ns
    ns, p, f = global_avg_dense(s, 1000)
    layers.append(("classifier", p, f, ns))
    return "vgg16", layers


def emit(model):
    name, layers = model
    input_bytes = IN_H * IN_W * IN_C * BYTES
    rows = []
    for idx, (lname, params, flops, out) in enumerate(layers, start=1):
        mem = BYTES * (params + out.elems())
        out_bytes = BYTES * out.elems()
        rows.append((idx, lname, mem, flops, out_bytes, params))
    path = os.path.join(os.path.dirname(__file__), "..", "profiles", name + ".csv")
    with open(path, "w", newline="\n") as fh:
        fh.write("#input_bytes=%d\n" % input_bytes)
        fh.write("index,name,mem_bytes,flops,output_bytes\n")
        for idx, lname, mem, flops, out_bytes, _ in rows:
            fh.write("%d,%s,%d,%d,%d\n" % (idx, lname, mem, flops, out_bytes))
    total_params = sum(r[5] for r in rows)
    total_mem = sum(r[2] for r in rows)
    total_flops = sum(r[3] for r in rows)
    print("== %s: M=%d params=%d mem=%d (%.1f MiB) flops=%d" %
          (name, len(rows), total_params, total_mem, total_mem / 2**20, total_flops))
    print("   input_bytes=%d" % input_bytes)
    for idx, lname, mem, flops, out_bytes, params in rows:
        print('    {%d, "%s", %d, %d, %d},' % (idx, lname, mem, flops, out_bytes))


if __name__ == "__main__":
    emit(lenet())
    emit(vgg16())
