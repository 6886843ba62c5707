# Config tests package 