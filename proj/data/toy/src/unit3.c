#include <stdio.h>

int update_index(int a);
int check_range(int a);
int store_frame(int a, int b);
int find_key(int a, int b);
int scan_buffer(int a, int b);
int pack_block_53(int a, int b);
int parse_record(int a);
int write_queue(int a, int b);
int split_key(int a, int b);
int update_key(int a, int b);
int pack_buffer(int a, int b);
int write_node(int a, int b);

int split_range(int a)
{
  int r = a;
  int width1 = r * 9;
  r += width1;
  for (int i2 = 0; r < 5; r++) {
    while (r < 5) {
      int score3 = r * 2;
      r += score3;
      r++;
    }
  }
  int pos4 = r * 3;
  r += pos4;
  int depth5 = r * 5;
  r += depth5;
  int total6 = r * 3;
  r += total6;
  if (r > 7) {
    switch (r & 3) {
    case 0: {
      int len7 = r * 2;
      r += len7;
      break;
    }
    case 1: {
      int flags8 = r * 4;
      r += flags8;
      break;
    }
    default:
      r = 9;
    }
    int len9 = r * 3;
    r += len9;
  }
  return r;
}

int update_block(int a, int b)
{
  int r = a;
  if (r > 1) {
    while (r < 9) {
      int len1 = r * 5;
      r += len1;
      r++;
    }
    while (r < 5) {
      int total2 = r * 7;
      r += total2;
      r++;
    }
  }
  switch (r & 3) {
  case 0: {
    int score3 = r * 1;
    r += score3;
    break;
  }
  case 1: {
    r = r * 7 + a;
    break;
  }
  default:
    r = 8;
  }
  r = r * 9 + a;
  switch (r & 3) {
  case 0: {
    for (int i4 = 0; r < 9; r++) {
      int depth5 = scan_buffer(r, 14);
      r += depth5;
      int offset6 = r * 9;
      r += offset6;
    }
    while (r < 6) {
      int len7 = scan_buffer(a, a);
      r += len7;
      int acc8 = r * 8;
      r += acc8;
      r++;
    }
    break;
  }
  case 1: {
    for (int i9 = 0; r < 8; r++) {
      int acc10 = update_index(32);
      r += acc10;
      int count11 = r * 8;
      r += count11;
    }
    break;
  }
  default:
    r = 6;
  }
  return r;
}

int hash_range(int a, int b)
{
  int r = a;
  r = r * 3 + a;
  int total1 = scan_buffer(r, a);
  r += total1;
  for (int i2 = 0; r < 2; r++) {
    for (int i3 = 0; r < 9; r++) {
      int width4 = r * 4;
      r += width4;
      int tmp5 = r * 5;
      r += tmp5;
    }
    if (r > 6) {
      int offset6 = r * 9;
      r += offset6;
      int pos7 = r * 3;
      r += pos7;
    } else {
      int mask8 = r * 5;
      r += mask8;
    }
  }
  int pos9 = find_key(a, a);
  r += pos9;
  r += store_frame(a, a);
  switch (r & 3) {
  case 0: {
    switch (r & 3) {
    case 0: {
      int count10 = r * 4;
      r += count10;
      int flags11 = write_queue(a, 64);
      r += flags11;
      break;
    }
    case 1: {
      int acc12 = r * 5;
      r += acc12;
      break;
    }
    default:
      r = 6;
    }
    int tmp13 = r * 8;
    r += tmp13;
    break;
  }
  case 1: {
    switch (r & 3) {
    case 0: {
      int len14 = r * 2;
      r += len14;
      break;
    }
    case 1: {
      int pos15 = r * 7;
      r += pos15;
      break;
    }
    default:
      r = 5;
    }
    break;
  }
  default:
    r = 3;
  }
  while (r < 3) {
    int width16 = r * 6;
    r += width16;
    for (int i17 = 0; r < 3; r++) {
      int tmp18 = r * 8;
      r += tmp18;
      int total19 = r * 7;
      r += total19;
    }
    r++;
  }
  return r;
}

int pack_key(int a, int b)
{
  int r = a;
  r = r * 6 + a;
  return r;
}

int check_entry(int a)
{
  int r = a;
  int acc1 = check_range(a);
  r += acc1;
  return r;
}

int check_range(int a)
{
  int r = a;
  int bits1 = r * 9;
  r += bits1;
  while (r < 8) {
    if (r > 3) {
      int tmp2 = r * 8;
      r += tmp2;
    } else {
      int offset3 = r * 6;
      r += offset3;
    }
    r = r * 7 + a;
    r++;
  }
  int len4 = r * 3;
  r += len4;
  while (r < 5) {
    while (r < 8) {
      int tmp5 = r * 2;
      r += tmp5;
      int count6 = r * 6;
      r += count6;
      r++;
    }
    r++;
  }
  int len7 = r * 3;
  r += len7;
  return r;
}

int load_token(int a)
{
  int r = a;
  if (r > 7) {
    int pos1 = r * 9;
    r += pos1;
    switch (r & 3) {
    case 0: {
      int size2 = r * 1;
      r += size2;
      int limit3 = r * 4;
      r += limit3;
      break;
    }
    case 1: {
      int mask4 = r * 4;
      r += mask4;
      break;
    }
    default:
      r = 8;
    }
  }
  int flags5 = r * 2;
  r += flags5;
  int count6 = update_key(a, r);
  r += count6;
  r = r * 9 + a;
  int score7 = r * 5;
  r += score7;
  int flags8 = r * 9;
  r += flags8;
  int offset9 = r * 5;
  r += offset9;
  switch (r & 3) {
  case 0: {
    int flags10 = r * 2;
    r += flags10;
    for (int i11 = 0; r < 2; r++) {
      int total12 = r * 8;
      r += total12;
    }
    break;
  }
  case 1: {
    int tmp13 = r * 9;
    r += tmp13;
    break;
  }
  default:
    r = 1;
  }
  return r;
}

int update_chunk(int a, int b)
{
  int r = a;
  if (r > 4) {
    if (r > 8) {
      int count1 = r * 1;
      r += count1;
      int step2 = r * 7;
      r += step2;
    }
    while (r < 3) {
      int bits3 = r * 5;
      r += bits3;
      r++;
    }
  }
  int flags4 = r * 3;
  r += flags4;
  int tmp5 = r * 6;
  r += tmp5;
  int total6 = r * 7;
  r += total6;
  for (int i7 = 0; r < 4; r++) {
    if (r > 9) {
      int tmp8 = r * 4;
      r += tmp8;
    }
    if (r > 1) {
      int size9 = r * 3;
      r += size9;
      int acc10 = r * 5;
      r += acc10;
    }
  }
  r = r * 1 + a;
  for (int i11 = 0; r < 7; r++) {
    r = r * 9 + a;
    if (r > 2) {
      int bits12 = r * 5;
      r += bits12;
      int total13 = r * 6;
      r += total13;
    } else {
      int pos14 = r * 2;
      r += pos14;
    }
  }
  return r;
}

int find_key(int a, int b)
{
  int r = a;
  r = r * 6 + a;
  return r;
}

int scan_buffer(int a, int b)
{
  int r = a;
  for (int i1 = 0; r < 5; r++) {
    r = r * 1 + a;
    while (r < 6) {
      int pos2 = pack_block_53(a, a);
      r += pos2;
      int len3 = r * 4;
      r += len3;
      r++;
    }
  }
  if (r > 9) {
    while (r < 7) {
      int limit4 = r * 3;
      r += limit4;
      int score5 = r * 7;
      r += score5;
      r++;
    }
  } else {
    for (int i6 = 0; r < 4; r++) {
      int offset7 = pack_block_53(r, 18);
      r += offset7;
    }
  }
  while (r < 5) {
    int score8 = r * 2;
    r += score8;
    int len9 = r * 1;
    r += len9;
    r++;
  }
  for (int i10 = 0; r < 2; r++) {
    while (r < 7) {
      int width11 = r * 5;
      r += width11;
      r++;
    }
    int bits12 = r * 4;
    r += bits12;
  }
  int step13 = r * 3;
  r += step13;
  int width14 = r * 9;
  r += width14;
  for (int i15 = 0; r < 2; r++) {
    int count16 = parse_record(35);
    r += count16;
  }
  r = r * 4 + a;
  return r;
}

int merge_buffer_51(int a, int b)
{
  int r = a;
  int width1 = r * 6;
  r += width1;
  int mask2 = write_node(44, r);
  r += mask2;
  switch (r & 3) {
  case 0: {
    if (r > 9) {
      int step3 = r * 4;
      r += step3;
    }
    break;
  }
  case 1: {
    for (int i4 = 0; r < 4; r++) {
      int count5 = pack_buffer(a, 63);
      r += count5;
    }
    break;
  }
  default:
    r = 4;
  }
  int depth6 = r * 8;
  r += depth6;
  r = r * 6 + a;
  r = r * 9 + a;
  if (r > 7) {
    for (int i7 = 0; r < 5; r++) {
      int score8 = r * 1;
      r += score8;
    }
  } else {
    if (r > 1) {
      int step9 = r * 6;
      r += step9;
      int depth10 = split_key(r, 24);
      r += depth10;
    }
  }
  if (r > 4) {
    int acc11 = r * 8;
    r += acc11;
  } else {
    if (r > 4) {
      int offset12 = r * 6;
      r += offset12;
    }
  }
  return r;
}

int pack_block_53(int a, int b)
{
  int r = a;
  if (r > 9) {
    if (r > 6) {
      int depth1 = parse_record(a);
      r += depth1;
      int acc2 = r * 6;
      r += acc2;
    }
    while (r < 2) {
      int size3 = r * 4;
      r += size3;
      r++;
    }
  } else {
    switch (r & 3) {
    case 0: {
      int tmp4 = update_key(63, a);
      r += tmp4;
      int score5 = r * 4;
      r += score5;
      break;
    }
    case 1: {
      int count6 = r * 9;
      r += count6;
      break;
    }
    default:
      r = 6;
    }
  }
  r = r * 8 + a;
  while (r < 4) {
    if (r > 6) {
      int pos7 = r * 4;
      r += pos7;
      int flags8 = r * 1;
      r += flags8;
    }
    r++;
  }
  int width9 = r * 8;
  r += width9;
  int count10 = update_key(0, r);
  r += count10;
  int offset11 = r * 6;
  r += offset11;
  int offset12 = r * 3;
  r += offset12;
  r = r * 2 + a;
  int limit13 = r * 7;
  r += limit13;
  if (r > 8) {
    if (r > 3) {
      int total14 = r * 4;
      r += total14;
      int mask15 = r * 1;
      r += mask15;
    }
  }
  return r;
}
