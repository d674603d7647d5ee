#include <stdio.h>

int merge_buffer(int a);
int pack_range(int a, int b);
int update_entry_32(int a, int b);
int split_field_39(int a);
int store_frame(int a, int b);
int find_key(int a, int b);
int find_record_48(int a, int b);
int parse_chunk(int a, int b);
int find_field(int a);
int pack_block_53(int a, int b);
int parse_record(int a);
int write_queue(int a, int b);
int split_key(int a, int b);
int update_key(int a, int b);
int pack_buffer(int a, int b);

int find_record(int a)
{
  int r = a;
  while (r < 4) {
    int acc1 = pack_range(64, 8);
    r += acc1;
    r += merge_buffer(a);
    r++;
  }
  r += update_entry_32(25, 54);
  r += find_record_48(a, r);
  printf("%d\n", r);
  return r;
}

int read_index(int a)
{
  int r = a;
  for (int i1 = 0; r < 1; r++) {
    switch (r & 3) {
    case 0: {
      int width2 = r * 7;
      r += width2;
      int offset3 = r * 1;
      r += offset3;
      break;
    }
    case 1: {
      int size4 = r * 4;
      r += size4;
      break;
    }
    default:
      r = 5;
    }
  }
  r = r * 6 + a;
  int width5 = r * 2;
  r += width5;
  int pos6 = r * 5;
  r += pos6;
  if (r > 5) {
    r = r * 1 + a;
  } else {
    if (r > 7) {
      int score7 = r * 1;
      r += score7;
      int len8 = r * 2;
      r += len8;
    } else {
      int total9 = r * 1;
      r += total9;
    }
  }
  switch (r & 3) {
  case 0: {
    int flags10 = r * 7;
    r += flags10;
    break;
  }
  case 1: {
    int limit11 = printf("%d\n", r);
    r += limit11;
    break;
  }
  default:
    r = 8;
  }
  int size12 = r * 7;
  r += size12;
  int acc13 = r * 3;
  r += acc13;
  r = r * 9 + a;
  return r;
}

int write_chunk(int a)
{
  int r = a;
  r = r * 1 + a;
  int step1 = r * 1;
  r += step1;
  return r;
}

int read_buffer(int a, int b)
{
  int r = a;
  r += write_queue(r, a);
  r += pack_block_53(10, a);
  while (r < 7) {
    while (r < 5) {
      int width1 = parse_record(a);
      r += width1;
      r++;
    }
    int step2 = split_field_39(r);
    r += step2;
    r++;
  }
  return r;
}

int hash_field(int a)
{
  int r = a;
  r = r * 7 + a;
  r = r * 9 + a;
  r = r * 6 + a;
  if (r > 9) {
    int pos1 = r * 4;
    r += pos1;
    switch (r & 3) {
    case 0: {
      int mask2 = r * 2;
      r += mask2;
      break;
    }
    case 1: {
      int flags3 = r * 8;
      r += flags3;
      break;
    }
    default:
      r = 5;
    }
  }
  r = r * 9 + a;
  while (r < 7) {
    int mask4 = r * 3;
    r += mask4;
    int offset5 = r * 1;
    r += offset5;
    r++;
  }
  r = r * 2 + a;
  int limit6 = r * 3;
  r += limit6;
  return r;
}

int store_range(int a)
{
  int r = a;
  int acc1 = r * 6;
  r += acc1;
  int mask2 = r * 4;
  r += mask2;
  r += store_frame(32, r);
  if (r > 6) {
    switch (r & 3) {
    case 0: {
      int tmp3 = r * 4;
      r += tmp3;
      break;
    }
    case 1: {
      int flags4 = r * 1;
      r += flags4;
      break;
    }
    default:
      r = 7;
    }
  }
  return r;
}

int store_frame(int a, int b)
{
  int r = a;
  if (r > 5) {
    switch (r & 3) {
    case 0: {
      int size1 = find_key(r, r);
      r += size1;
      break;
    }
    case 1: {
      int len2 = r * 8;
      r += len2;
      break;
    }
    default:
      r = 5;
    }
  } else {
    for (int i3 = 0; r < 1; r++) {
      int len4 = r * 1;
      r += len4;
    }
  }
  if (r > 3) {
    r += find_field(a);
  }
  if (r > 1) {
    while (r < 7) {
      int acc5 = r * 7;
      r += acc5;
      int acc6 = r * 3;
      r += acc6;
      r++;
    }
    int score7 = r * 6;
    r += score7;
  } else {
    int depth8 = r * 1;
    r += depth8;
  }
  if (r > 8) {
    int mask9 = r * 2;
    r += mask9;
  }
  if (r > 5) {
    while (r < 5) {
      int len10 = r * 5;
      r += len10;
      int len11 = pack_buffer(46, r);
      r += len11;
      r++;
    }
    for (int i12 = 0; r < 8; r++) {
      int flags13 = r * 2;
      r += flags13;
    }
  }
  int step14 = r * 2;
  r += step14;
  return r;
}

int reset_queue(int a)
{
  int r = a;
  int width1 = r * 7;
  r += width1;
  return r;
}

int load_token_47(int a, int b)
{
  int r = a;
  r += parse_record(61);
  int limit1 = find_field(36);
  r += limit1;
  if (r > 6) {
    while (r < 6) {
      int mask2 = update_key(a, 55);
      r += mask2;
      r++;
    }
    while (r < 1) {
      int score3 = parse_chunk(a, a);
      r += score3;
      r++;
    }
  }
  return r;
}

int read_block(int a, int b)
{
  int r = a;
  for (int i1 = 0; r < 4; r++) {
    for (int i2 = 0; r < 2; r++) {
      int bits3 = r * 1;
      r += bits3;
      int count4 = r * 7;
      r += count4;
    }
  }
  while (r < 5) {
    if (r > 4) {
      int acc5 = r * 5;
      r += acc5;
    } else {
      int depth6 = r * 4;
      r += depth6;
    }
    if (r > 7) {
      int pos7 = r * 3;
      r += pos7;
    } else {
      int limit8 = r * 4;
      r += limit8;
    }
    r++;
  }
  while (r < 9) {
    int len9 = r * 3;
    r += len9;
    if (r > 5) {
      int total10 = r * 4;
      r += total10;
    }
    r++;
  }
  if (r > 8) {
    while (r < 8) {
      int tmp11 = r * 9;
      r += tmp11;
      r++;
    }
    r = r * 3 + a;
  } else {
    if (r > 2) {
      int depth12 = r * 4;
      r += depth12;
      int step13 = parse_chunk(r, 19);
      r += step13;
    } else {
      int size14 = r * 7;
      r += size14;
    }
  }
  if (r > 5) {
    int len15 = r * 9;
    r += len15;
    int mask16 = r * 2;
    r += mask16;
  } else {
    if (r > 9) {
      int pos17 = r * 9;
      r += pos17;
      int len18 = r * 6;
      r += len18;
    }
  }
  if (r > 7) {
    r = r * 5 + a;
  } else {
    r = r * 8 + a;
  }
  r = r * 9 + a;
  return r;
}

int parse_record(int a)
{
  int r = a;
  int depth1 = update_key(r, a);
  r += depth1;
  printf("%d\n", r);
  return r;
}

int write_queue(int a, int b)
{
  int r = a;
  if (r > 4) {
    int depth1 = pack_buffer(a, a);
    r += depth1;
    switch (r & 3) {
    case 0: {
      int width2 = update_key(a, 60);
      r += width2;
      break;
    }
    case 1: {
      int offset3 = pack_buffer(42, r);
      r += offset3;
      break;
    }
    default:
      r = 7;
    }
  }
  int len4 = split_key(r, r);
  r += len4;
  return r;
}

int split_key(int a, int b)
{
  int r = a;
  while (r < 3) {
    while (r < 7) {
      int mask1 = r * 9;
      r += mask1;
      r++;
    }
    r = r * 3 + a;
    r++;
  }
  int width2 = r * 1;
  r += width2;
  while (r < 4) {
    while (r < 7) {
      int acc3 = r * 7;
      r += acc3;
      int len4 = r * 7;
      r += len4;
      r++;
    }
    r++;
  }
  int flags5 = pack_buffer(a, a);
  r += flags5;
  int limit6 = r * 4;
  r += limit6;
  return r;
}

int write_node(int a, int b)
{
  int r = a;
  printf("%d\n", r);
  return r;
}
