#!/usr/bin/env python3
"""Direct-formula caption metric oracle.

Recomputes corpus BLEU-1/3/4 and CIDEr-D from first principles, sharing no
code with the C++ library, and prints the golden values that the C++ tests
freeze. Usage:

    caption_oracle.py CAPTIONS.json            # full-precision values
    caption_oracle.py CAPTIONS.json --report   # report in the CLI format
"""
import json
import math
import string
import sys
from collections import Counter


def tokenize(text):
    table = str.maketrans("", "", string.punctuation)
    return text.lower().translate(table).split()


def ngrams(tokens, n):
    return Counter(tuple(tokens[i:i + n]) for i in range(len(tokens) - n + 1))


def bleu(records, max_n):
    matched = [0] * max_n
    total = [0] * max_n
    cand_len = ref_len = 0
    for refs, cand in records:
        cand_len += len(cand)
        ref_len += min((abs(len(r) - len(cand)), len(r)) for r in refs)[1]
        for n in range(1, max_n + 1):
            best = Counter()
            for r in refs:
                for g, k in ngrams(r, n).items():
                    best[g] = max(best[g], k)
            for g, k in ngrams(cand, n).items():
                matched[n - 1] += min(k, best[g])
                total[n - 1] += k
    if cand_len == 0 or any(m == 0 for m in matched):
        return 0.0
    log_sum = sum(math.log(m / t) for m, t in zip(matched, total))
    bp = math.exp(1 - ref_len / cand_len) if cand_len < ref_len else 1.0
    return bp * math.exp(log_sum / max_n)


def cider_d(records, max_n=4, sigma=6.0):
    df = Counter()
    for refs, _ in records:
        seen = set()
        for r in refs:
            for n in range(1, max_n + 1):
                seen.update(ngrams(r, n))
        df.update(seen)
    log_docs = math.log(len(records))

    def vec(tokens):
        v = [dict() for _ in range(max_n)]
        for n in range(1, max_n + 1):
            for g, tf in ngrams(tokens, n).items():
                v[n - 1][g] = tf * (log_docs - math.log(max(1.0, df[g])))
        norms = [math.sqrt(sum(x * x for x in d.values())) for d in v]
        return v, norms, len(tokens)

    per_record = []
    for refs, cand in records:
        cv, cn, cl = vec(cand)
        acc = [0.0] * max_n
        for r in refs:
            rv, rn, rl = vec(r)
            pen = math.exp(-((cl - rl) ** 2) / (2 * sigma ** 2))
            for n in range(max_n):
                dot = sum(min(w, rv[n][g]) * rv[n][g]
                          for g, w in cv[n].items() if g in rv[n])
                if cn[n] != 0 and rn[n] != 0:
                    dot /= cn[n] * rn[n]
                acc[n] += dot * pen
        per_record.append(sum(acc) / max_n / len(refs) * 10.0)
    return sum(per_record) / len(per_record), per_record


def main():
    with open(sys.argv[1]) as f:
        doc = json.load(f)
    records = [([tokenize(r) for r in item["refs"]], tokenize(item["candidate"]))
               for item in doc]
    b1, b3, b4 = bleu(records, 1), bleu(records, 3), bleu(records, 4)
    cider, per_record = cider_d(records)
    if "--report" in sys.argv:
        print("{")
        print(f'  "bleu1": {b1:.6f},')
        print(f'  "bleu3": {b3:.6f},')
        print(f'  "bleu4": {b4:.6f},')
        print(f'  "cider": {cider:.6f},')
        print(f'  "records": {len(records)}')
        print("}")
        return
    print(f"bleu1 {b1!r}\nbleu3 {b3!r}\nbleu4 {b4!r}\ncider {cider!r}")
    for item, s in zip(doc, per_record):
        print(f"cider[{item['id']}] {s!r}")


if __name__ == "__main__":
    main()
